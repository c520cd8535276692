#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano4/formats.hpp"
#include "fano4/wps.hpp"

namespace fano4 {

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnrepresentableDegree : BuildError {
    using BuildError::BuildError;
};
struct NegativeDimension : BuildError {
    using BuildError::BuildError;
};
struct NoSuchSection : BuildError {
    using BuildError::BuildError;
};

struct BuildStep {
    enum class Kind { Pullback, Cone, Section };
    Kind kind = Kind::Pullback;
    std::vector<int> weights;       // cone weights
    int degree = 0;                 // section degree
    bool quasilinear = false;       // section branch taken
    WeightVector ambient_before;    // ambient the step was applied to

    std::string str() const;
};

/* A candidate variety: format data over an ambient weighted projective
 * space, with its construction history. K_X = canonical_coeff() * H. */
struct Model {
    FormatData format;
    WeightVector ambient;
    std::vector<BuildStep> history;

    int dim() const {
        return static_cast<int>(ambient.size()) - 1 - format.codim;
    }
    int canonical_coeff() const;
};

/* Regular pullback of a format to an ambient. Every entry and equation
 * degree must be representable in the weight semigroup of the ambient. */
Model pullback_model(const FormatData& f, const WeightVector& w);

/* Projective cone: new coordinates absent from all equations. */
Model cone(const Model& m, const std::vector<int>& new_weights);

/* Hypersurface section of degree d with adjunction bookkeeping. When d
 * equals an ambient weight the quasilinear branch (coordinate elimination)
 * is taken unless quasilinear=false is forced; otherwise the numerator
 * gains a factor (1 - t^d). Both branches have the same Hilbert series. */
Model regular_section(const Model& m, int d, std::optional<bool> quasilinear = std::nullopt);

/* Fano index when -K = iH with i > 0; nullopt means not Fano. */
std::optional<int> index_of(const Model& m);

} // namespace fano4
