// Python bindings for the core operations: model building, Hilbert series,
// invariants, smoothness reports, the bundled reference tables, and the
// bounded search. Half-integer parameters are passed as doubled integers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "fano4/invariants.hpp"
#include "fano4/known_data.hpp"
#include "fano4/search.hpp"
#include "fano4/strata.hpp"

namespace py = pybind11;
using namespace fano4;

namespace {

Family family_from(const std::string& s) {
    if (s == "ci")
        return Family::CI;
    if (s == "gr25")
        return Family::GR25;
    if (s == "gr25h")
        return Family::GR25_H;
    if (s == "p2xp2")
        return Family::P2XP2;
    throw py::value_error("unknown family: " + s);
}

Model build(const std::string& family, const WeightVector& ambient,
            const std::vector<int>& a2, const std::vector<int>& b2,
            const std::vector<int>& c2, const std::vector<int>& degrees, int hyp) {
    FormatData f;
    switch (family_from(family)) {
    case Family::CI:
        f = ci_format(degrees);
        break;
    case Family::GR25:
        f = gr25_format(PfaffianParams{HalfIntVector{a2}});
        break;
    case Family::GR25_H:
        f = with_hypersurface(gr25_format(PfaffianParams{HalfIntVector{a2}}), hyp);
        break;
    case Family::P2XP2:
        f = p2xp2_format(SegreParams{HalfIntVector{b2}, HalfIntVector{c2}});
        break;
    }
    return pullback_model(f, ambient);
}

py::int_ to_py(const Int& v) { return py::int_(py::str(v.str())); }

py::object rational_to_py(const Rational& r) {
    namespace mp = boost::multiprecision;
    if (mp::denominator(r) == 1)
        return to_py(mp::numerator(r));
    return py::make_tuple(to_py(mp::numerator(r)), to_py(mp::denominator(r)));
}

py::list hilbert_series(const std::string& family, const WeightVector& ambient, int order,
                        const std::vector<int>& a2, const std::vector<int>& b2,
                        const std::vector<int>& c2, const std::vector<int>& degrees,
                        int hyp) {
    const Model m = build(family, ambient, a2, b2, c2, degrees, hyp);
    py::list out;
    for (const Int& c : plurigenera(m, order).coeffs)
        out.append(to_py(c));
    return out;
}

py::dict analyze(const std::string& family, const WeightVector& ambient,
                 const std::vector<int>& a2, const std::vector<int>& b2,
                 const std::vector<int>& c2, const std::vector<int>& degrees, int hyp,
                 int order) {
    const Model m = build(family, ambient, a2, b2, c2, degrees, hyp);
    const auto inv = invariant_record(m, order);
    const auto rep = smoothness_verdict(m);
    py::dict d;
    py::list h0;
    for (const Int& c : inv.h0.coeffs)
        h0.append(to_py(c));
    d["h0"] = h0;
    d["K4"] = rational_to_py(inv.degree_K4);
    d["c2K2"] = rational_to_py(inv.c2K2);
    d["rr_consistent"] = inv.rr_consistent;
    d["small_invariants"] = inv.small;
    d["canonical_coeff"] = m.canonical_coeff();
    const auto idx = index_of(m);
    d["index"] = idx ? py::object(py::int_(*idx)) : py::object(py::none());
    d["verdict"] = verdict_name(rep.verdict);
    d["wellformed"] = rep.wellformed;
    py::list orb;
    for (const auto& p : rep.orbifold)
        orb.append(p.str());
    d["orbifold"] = orb;
    return d;
}

py::list known_rows(const std::vector<KnownModel>& rows) {
    py::list out;
    for (const auto& k : rows) {
        const auto inv = invariant_record(build_known(k));
        py::dict d;
        d["no"] = k.no;
        d["label"] = k.label;
        if (!k.note.empty())
            d["note"] = k.note;
        d["expected_h0"] = k.expected_h0;
        d["expected_K4"] = k.expected_K4;
        d["h0"] = to_py(inv.h0[1]);
        d["K4"] = rational_to_py(inv.degree_K4);
        d["matches"] = inv.degree_K4 == Rational(k.expected_K4) &&
                       inv.h0[1] == Int(k.expected_h0);
        out.append(d);
    }
    return out;
}

py::list run_search_py(const std::vector<std::string>& families, int max_doubled_param,
                       int max_ambient_weight, int max_equation_degree,
                       int max_hypersurface_degree, int ci_max_codim, int workers) {
    SearchSpec spec;
    spec.families.clear();
    for (const auto& f : families)
        spec.families.push_back(family_from(f));
    spec.max_doubled_param = max_doubled_param;
    spec.max_ambient_weight = max_ambient_weight;
    spec.max_equation_degree = max_equation_degree;
    spec.max_hypersurface_degree = max_hypersurface_degree;
    spec.ci_max_codim = ci_max_codim;
    spec.workers = workers;
    const auto res = run_search(spec);
    const py::module_ json = py::module_::import("json");
    py::list out;
    for (const auto& r : res.records)
        out.append(json.attr("loads")(r.to_json().dump()));
    out.append(json.attr("loads")(res.stats.to_json().dump()));
    return out;
}

} // namespace

PYBIND11_MODULE(fano4py, m) {
    m.doc() = "Exact Hilbert-series engine for Fano 4-fold candidates in Gorenstein formats";

    m.def("hilbert_series", &hilbert_series, py::arg("family"), py::arg("ambient"),
          py::arg("order") = 10, py::arg("a2") = std::vector<int>{},
          py::arg("b2") = std::vector<int>{}, py::arg("c2") = std::vector<int>{},
          py::arg("degrees") = std::vector<int>{}, py::arg("hyp") = 0,
          "Plurigenera h^0(-nK) for n = 0..order; half-integer parameters are doubled.");

    m.def("analyze", &analyze, py::arg("family"), py::arg("ambient"),
          py::arg("a2") = std::vector<int>{}, py::arg("b2") = std::vector<int>{},
          py::arg("c2") = std::vector<int>{}, py::arg("degrees") = std::vector<int>{},
          py::arg("hyp") = 0, py::arg("order") = 10,
          "Full invariant and smoothness report for one model.");

    m.def("table1", [] { return known_rows(table1()); },
          "Bundled non-complete-intersection reference rows with recomputed invariants.");
    m.def("table2", [] { return known_rows(table2()); },
          "Bundled hypersurface/complete-intersection reference rows.");

    m.def("geography", [] {
        py::list out;
        for (const auto& p : figure_points()) {
            py::dict d;
            d["K4"] = p.K4;
            d["h0"] = p.h0;
            d["source"] = p.source;
            out.append(d);
        }
        return out;
    }, "Bundled small-invariants geography dataset.");

    m.def("search", &run_search_py,
          py::arg("families") = std::vector<std::string>{"ci", "gr25", "gr25h", "p2xp2"},
          py::arg("max_doubled_param") = 9, py::arg("max_ambient_weight") = 8,
          py::arg("max_equation_degree") = 16, py::arg("max_hypersurface_degree") = 8,
          py::arg("ci_max_codim") = 4, py::arg("workers") = 1,
          "Bounded candidate search; returns the records plus a final stats dict.");
}
