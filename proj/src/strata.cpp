#include "fano4/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano4 {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::SMOOTH_CANDIDATE: return "SMOOTH_CANDIDATE";
    case Verdict::ORBIFOLD: return "ORBIFOLD";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

std::string OrbifoldPoint::str() const {
    std::ostringstream os;
    os << "1/" << r << "(";
    for (std::size_t i = 0; i < residues.size(); ++i)
        os << (i ? "," : "") << residues[i];
    os << ")";
    return os.str();
}

namespace {

std::vector<int> distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/* Degree-count survival: a general form of degree d restricts non-trivially
 * iff d lies in the stratum semigroup. */
bool survives_by_degree(const std::vector<int>& stratum_values, const Equation& eq) {
    return semigroup_contains(stratum_values, eq.degree);
}

/* Structural survival: some monomial of the equation has every factor
 * representable on the stratum. For general forms ({{d}}) this coincides
 * with the degree count. */
bool survives_by_monomials(const std::vector<int>& stratum_values, const Equation& eq) {
    for (const auto& mono : eq.monomial_factor_degrees) {
        bool all = true;
        for (int d : mono)
            if (!semigroup_contains(stratum_values, d)) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

} // namespace

StratumEstimate stratum_intersection_dim(const Model& m, const Stratum& s) {
    StratumEstimate est;
    est.stratum = s;
    est.exactness = m.format.family == Family::CI ? Exactness::EXACT : Exactness::HEURISTIC;

    const auto values = distinct(stratum_weights(m.ambient, s));
    for (const auto& eq : m.format.equations)
        if (survives_by_degree(values, eq))
            ++est.surviving;

    // equations of a format are not independent: never cut below the model
    const int cutting = std::min(est.surviving, m.format.codim);
    const int d = s.dimension() - cutting;
    if (d >= 0)
        est.dim = d;
    return est;
}

std::vector<OrbifoldPoint> orbifold_report(const Model& m) {
    std::vector<OrbifoldPoint> out;
    for (const auto& s : singular_strata(m.ambient)) {
        if (s.dimension() != 0)
            continue;
        const int idx = s.indices.front();
        const int w = m.ambient[static_cast<std::size_t>(idx)];
        const std::vector<int> values{w};

        bool removed = false;
        for (const auto& eq : m.format.equations)
            if (survives_by_monomials(values, eq)) {
                removed = true;
                break;
            }
        if (removed)
            continue;

        // Local transverse weights: equations vanishing at the point still
        // eliminate a direction u when they carry a term z^j * x_u with
        // u = d - j*w, up to the codimension of the model.
        std::vector<int> remaining;
        for (std::size_t i = 0; i < m.ambient.size(); ++i)
            if (static_cast<int>(i) != idx)
                remaining.push_back(m.ambient[i]);
        int eliminated = 0;
        for (const auto& eq : m.format.equations) {
            if (eliminated >= m.format.codim)
                break;
            for (int j = 1; eq.degree - j * w >= 1; ++j) {
                const int u = eq.degree - j * w;
                auto it = std::find(remaining.begin(), remaining.end(), u);
                if (it != remaining.end()) {
                    remaining.erase(it);
                    ++eliminated;
                    break;
                }
            }
        }

        OrbifoldPoint p;
        p.r = s.stabilizer;
        p.stratum_index = idx;
        for (int u : remaining)
            p.residues.push_back(u % p.r);
        std::sort(p.residues.begin(), p.residues.end());
        out.push_back(std::move(p));
    }
    return out;
}

bool embedded_wellformed(const Model& m) {
    for (const auto& s : singular_strata(m.ambient)) {
        const auto est = stratum_intersection_dim(m, s);
        if (!est.empty() && *est.dim > m.dim() - 2)
            return false;
    }
    return true;
}

StrataReport smoothness_verdict(const Model& m) {
    StrataReport report;
    report.wellformed = embedded_wellformed(m);
    report.orbifold = orbifold_report(m);

    bool stratum_survives = false;
    for (const auto& s : singular_strata(m.ambient)) {
        auto est = stratum_intersection_dim(m, s);
        if (!est.empty())
            stratum_survives = true;
        report.strata.push_back(std::move(est));
    }

    // sections must not base-lock onto X: any base-locus stratum that
    // persists into the final ambient has to miss the model
    bool base_locus_hits = false;
    for (const auto& step : m.history) {
        if (step.kind != BuildStep::Kind::Section)
            continue;
        for (const auto& bl : base_locus_strata(step.ambient_before, step.degree)) {
            const auto values = distinct(stratum_weights(step.ambient_before, bl));
            std::vector<int> persisting;
            for (int v : values)
                if (std::find(m.ambient.begin(), m.ambient.end(), v) != m.ambient.end())
                    persisting.push_back(v);
            std::ostringstream note;
            note << "|O(" << step.degree << ")| base locus on stratum of weights (";
            for (std::size_t i = 0; i < values.size(); ++i)
                note << (i ? "," : "") << values[i];
            note << ")";
            if (persisting.empty()) {
                note << ": removed with the ambient coordinates";
            } else {
                Stratum fs;
                int g = 0;
                for (std::size_t i = 0; i < m.ambient.size(); ++i)
                    if (std::find(persisting.begin(), persisting.end(), m.ambient[i]) !=
                        persisting.end()) {
                        fs.indices.push_back(static_cast<int>(i));
                        g = std::gcd(g, m.ambient[i]);
                    }
                fs.stabilizer = g;
                const auto est = stratum_intersection_dim(m, fs);
                if (est.empty()) {
                    note << ": misses the model";
                } else {
                    note << ": may meet the model (estimated dim " << *est.dim << ")";
                    base_locus_hits = true;
                }
            }
            report.base_locus_notes.push_back(note.str());
        }
    }

    if (!report.orbifold.empty())
        report.verdict = Verdict::ORBIFOLD;
    else if (stratum_survives || base_locus_hits)
        report.verdict = Verdict::INCONCLUSIVE;
    else
        report.verdict = Verdict::SMOOTH_CANDIDATE;
    return report;
}

} // namespace fano4
