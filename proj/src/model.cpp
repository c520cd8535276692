#include "fano4/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano4 {

namespace {

std::string weights_str(const std::vector<int>& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

std::vector<int> distinct_values(const WeightVector& w) {
    std::vector<int> v(w);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

std::string BuildStep::str() const {
    switch (kind) {
    case Kind::Pullback: return "pullback " + weights_str(ambient_before);
    case Kind::Cone: return "cone " + weights_str(weights);
    case Kind::Section:
        return std::string(quasilinear ? "quasilinear section(" : "section(") +
               std::to_string(degree) + ")";
    }
    return "?";
}

int Model::canonical_coeff() const {
    return format.socle_k - std::accumulate(ambient.begin(), ambient.end(), 0);
}

Model pullback_model(const FormatData& f, const WeightVector& w) {
    const WeightVector ambient = normalized(w);
    if (static_cast<int>(ambient.size()) - 1 - f.codim < 0)
        throw NegativeDimension("pullback_model: ambient too small for codimension " +
                                std::to_string(f.codim));
    const auto values = distinct_values(ambient);
    auto check = [&](int d, const char* what) {
        if (!semigroup_contains(values, d))
            throw UnrepresentableDegree(std::string(what) + " degree " + std::to_string(d) +
                                        " is not representable in " + weights_str(ambient));
    };
    for (int d : f.entry_degrees_flat())
        check(d, "entry");
    for (const auto& eq : f.equations)
        check(eq.degree, "equation");

    Model m;
    m.format = f;
    m.ambient = ambient;
    m.history.push_back(BuildStep{BuildStep::Kind::Pullback, {}, 0, false, ambient});
    return m;
}

Model cone(const Model& m, const std::vector<int>& new_weights) {
    if (new_weights.empty())
        throw BuildError("cone: no weights given");
    for (int x : new_weights)
        if (x < 1)
            throw BuildError("cone: weights must be positive");

    Model out = m;
    BuildStep step{BuildStep::Kind::Cone, new_weights, 0, false, m.ambient};
    out.ambient.insert(out.ambient.end(), new_weights.begin(), new_weights.end());
    out.ambient = normalized(out.ambient);
    out.history.push_back(std::move(step));
    return out;
}

Model regular_section(const Model& m, int d, std::optional<bool> quasilinear) {
    if (d <= 0)
        throw BuildError("regular_section: degree must be positive");
    if (m.dim() < 1)
        throw BuildError("regular_section: model has no positive-dimensional locus to cut");
    if (!semigroup_contains(distinct_values(m.ambient), d))
        throw NoSuchSection("no sections of degree " + std::to_string(d) + " on " +
                            weights_str(m.ambient));

    const bool weight_present =
        std::find(m.ambient.begin(), m.ambient.end(), d) != m.ambient.end();
    const bool quasi = quasilinear.value_or(weight_present);
    if (quasi && !weight_present)
        throw NoSuchSection("quasilinear section of degree " + std::to_string(d) +
                            " needs a coordinate of that weight");

    Model out = m;
    BuildStep step{BuildStep::Kind::Section, {}, d, quasi, m.ambient};
    if (quasi) {
        auto it = std::find(out.ambient.begin(), out.ambient.end(), d);
        out.ambient.erase(it);
    } else {
        out.format.numerator = out.format.numerator * IntPolynomial{{0, 1}, {d, -1}};
        out.format.socle_k += d;
        out.format.codim += 1;
        out.format.equations.push_back(Equation{d, {{d}}, true});
        out.format.hypersurface_degrees.push_back(d);
    }
    out.history.push_back(std::move(step));
    return out;
}

std::optional<int> index_of(const Model& m) {
    const int c = m.canonical_coeff();
    if (c < 0)
        return -c;
    return std::nullopt;
}

} // namespace fano4
