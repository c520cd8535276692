#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano4/invariants.hpp"
#include "fano4/model.hpp"

namespace fano4 {

enum class Exactness { EXACT, HEURISTIC };
enum class Verdict { SMOOTH_CANDIDATE, ORBIFOLD, INCONCLUSIVE };

std::string verdict_name(Verdict v);

struct StratumEstimate {
    Stratum stratum;
    std::optional<int> dim;  // nullopt = EMPTY
    int surviving = 0;       // equations restricting non-trivially
    Exactness exactness = Exactness::EXACT;

    bool empty() const { return !dim.has_value(); }
};

/* A 1/r(a_1,...) quotient-singularity descriptor at a surviving coordinate
 * point. */
struct OrbifoldPoint {
    int r = 1;
    std::vector<int> residues;
    int stratum_index = -1; // index into the ambient weight vector

    std::string str() const;
};

struct StrataReport {
    std::vector<StratumEstimate> strata;
    std::vector<OrbifoldPoint> orbifold;
    std::vector<std::string> base_locus_notes;
    bool wellformed = true;
    Verdict verdict = Verdict::SMOOTH_CANDIDATE;
};

/* dim(stratum) - min(#surviving equations, codim of the model), EMPTY when
 * negative. Survival of an equation is decided by semigroup membership of
 * its degree alone; correlations among Pfaffians/minors are ignored, hence
 * HEURISTIC for those formats. */
StratumEstimate stratum_intersection_dim(const Model& m, const Stratum& s);

/* Quotient-singularity descriptors for coordinate points that survive every
 * equation. Here survival uses the monomial structure of the equations: a
 * Pfaffian or minor restricts non-trivially only when one of its products
 * has every factor degree representable on the stratum. */
std::vector<OrbifoldPoint> orbifold_report(const Model& m);

/* Every singular stratum meets X in codimension >= 2 within X. */
bool embedded_wellformed(const Model& m);

StrataReport smoothness_verdict(const Model& m);

} // namespace fano4
