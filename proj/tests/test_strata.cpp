#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano4/strata.hpp"

using namespace fano4;

namespace {

WeightVector ones(int n) { return WeightVector(static_cast<std::size_t>(n), 1); }

WeightVector weights(std::initializer_list<std::pair<int, int>> classes) {
    WeightVector w;
    for (auto [v, n] : classes)
        w.insert(w.end(), static_cast<std::size_t>(n), v);
    return w;
}

FormatData gr25(std::vector<int> a2) {
    return gr25_format(PfaffianParams{HalfIntVector{std::move(a2)}});
}

Model row3() { return pullback_model(gr25({1, 1, 1, 3, 3}), weights({{1, 6}, {2, 2}})); }

Model row6() {
    return pullback_model(with_hypersurface(gr25({1, 1, 1, 1, 1}), 4),
                          weights({{1, 8}, {2, 1}}));
}

Model row10() {
    return pullback_model(
        p2xp2_format(SegreParams{HalfIntVector{{2, 2, 2}}, HalfIntVector{{2, 2, 2}}}),
        weights({{1, 5}, {2, 4}}));
}

Stratum stratum_of_weight(const Model& m, int w) {
    for (const auto& s : singular_strata(m.ambient))
        if (m.ambient[static_cast<std::size_t>(s.indices.front())] == w)
            return s;
    REQUIRE(false);
    return {};
}

} // namespace

TEST_CASE("stratum_intersection_dim") {
    // Pfaffian model: the weight-2 curve stratum is cut out by the three
    // degree-4 equations (the degree-3 ones vanish identically on it)
    const Model m3 = row3();
    const auto est = stratum_intersection_dim(m3, stratum_of_weight(m3, 2));
    CHECK(est.empty());
    CHECK(est.surviving == 3);
    CHECK(est.exactness == Exactness::HEURISTIC);

    // complete intersection (6,4) in P(1^4,2^2,3): the weight-3 point only
    // sees the sextic
    const Model x64 = pullback_model(ci_format({6, 4}), weights({{1, 4}, {2, 2}, {3, 1}}));
    const auto e3 = stratum_intersection_dim(x64, stratum_of_weight(x64, 3));
    CHECK(e3.empty());
    CHECK(e3.surviving == 1);
    CHECK(e3.exactness == Exactness::EXACT);
    const auto e2 = stratum_intersection_dim(x64, stratum_of_weight(x64, 2));
    CHECK(e2.empty());
    CHECK(e2.surviving == 2);
}

TEST_CASE("stratum_intersection_dim caps the cut by the codimension") {
    // ambient P(2^9): the whole space is one stratum; nine degree-4 minors
    // can still only cut down by the format codimension 4
    const Model seg = pullback_model(
        p2xp2_format(SegreParams{HalfIntVector{{2, 2, 2}}, HalfIntVector{{2, 2, 2}}}),
        weights({{2, 9}}));
    const auto s = singular_strata(seg.ambient);
    REQUIRE(s.size() == 1);
    const auto est = stratum_intersection_dim(seg, s[0]);
    REQUIRE_FALSE(est.empty());
    CHECK(*est.dim == 4);
    CHECK(est.surviving == 9);
}

TEST_CASE("orbifold_report finds the surviving quotient point") {
    // intermediate 5-fold of the first worked chain: P(1^6,2^2,3) with all
    // five Pfaffians vanishing at the weight-3 point
    Model m = pullback_model(gr25({1, 1, 1, 3, 3}), weights({{1, 3}, {2, 6}, {3, 1}}));
    m = cone(m, {1, 1, 1});
    for (int i = 0; i < 4; ++i)
        m = regular_section(m, 2);
    REQUIRE(m.ambient == weights({{1, 6}, {2, 2}, {3, 1}}));
    REQUIRE(m.dim() == 5);

    const auto pts = orbifold_report(m);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].r == 3);
    CHECK(pts[0].residues == std::vector<int>{1, 1, 1, 2, 2});
    CHECK(pts[0].str() == "1/3(1,1,1,2,2)");

    // the cubic section removes the point; the final 4-fold is clean
    const Model x = regular_section(m, 3);
    CHECK(orbifold_report(x).empty());
    CHECK(orbifold_report(row3()).empty());

    Model plain;
    plain.format = ci_format({2});
    plain.ambient = ones(5);
    CHECK(orbifold_report(plain).empty());
}

TEST_CASE("orbifold_report on a quartic missing a weight-3 point") {
    const Model m = pullback_model(ci_format({4}), weights({{1, 4}, {2, 1}, {3, 1}}));
    const auto pts = orbifold_report(m);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].r == 3);
    // the quartic eliminates one transverse weight-1 direction (4 = 3 + 1)
    CHECK(pts[0].residues == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("embedded_wellformed") {
    // 9-fold cone over the Segre model in P(1^5,2^9)
    Model y1 = pullback_model(
        p2xp2_format(SegreParams{HalfIntVector{{2, 2, 2}}, HalfIntVector{{2, 2, 2}}}),
        weights({{2, 9}}));
    const Model coned = cone(y1, {1, 1, 1, 1, 1});
    CHECK(coned.dim() == 9);
    CHECK(embedded_wellformed(coned));

    // before the cone the singular stratum is the whole ambient: estimated
    // intersection dimension 4 on a 4-fold is not codimension >= 2
    CHECK_FALSE(embedded_wellformed(y1));

    CHECK(embedded_wellformed(pullback_model(ci_format({5}), ones(6))));
}

TEST_CASE("smoothness_verdict on the table models") {
    for (const Model& m : {row3(), row6(), row10()}) {
        const auto report = smoothness_verdict(m);
        CHECK(report.verdict == Verdict::SMOOTH_CANDIDATE);
        CHECK(report.wellformed);
        CHECK(report.orbifold.empty());
    }
}

TEST_CASE("smoothness_verdict on the worked chains, including base loci") {
    // Pfaffian chain: the quadrics' base locus is the weight-3 point, which
    // leaves the ambient with the cubic section
    Model m = pullback_model(gr25({1, 1, 1, 3, 3}), weights({{1, 3}, {2, 6}, {3, 1}}));
    m = cone(m, {1, 1, 1});
    for (int i = 0; i < 4; ++i)
        m = regular_section(m, 2);
    m = regular_section(m, 3);
    const auto r1 = smoothness_verdict(m);
    CHECK(r1.verdict == Verdict::SMOOTH_CANDIDATE);
    CHECK_FALSE(r1.base_locus_notes.empty());

    // Gr(2,5) chain with the non-quasilinear quartic
    Model g = pullback_model(gr25({1, 1, 1, 1, 1}), ones(10));
    g = cone(g, {2});
    g = regular_section(g, 4);
    g = regular_section(g, 1);
    g = regular_section(g, 1);
    CHECK(smoothness_verdict(g).verdict == Verdict::SMOOTH_CANDIDATE);

    // Segre chain with five quasilinear quadrics
    Model s = pullback_model(
        p2xp2_format(SegreParams{HalfIntVector{{2, 2, 2}}, HalfIntVector{{2, 2, 2}}}),
        weights({{2, 9}}));
    s = cone(s, {1, 1, 1, 1, 1});
    for (int i = 0; i < 5; ++i)
        s = regular_section(s, 2);
    CHECK(smoothness_verdict(s).verdict == Verdict::SMOOTH_CANDIDATE);
}

TEST_CASE("smoothness_verdict is conservative") {
    // a quartic through P(1^4,2^2) keeps a weight-2 stratum estimate of 0
    const Model m = pullback_model(ci_format({4}), weights({{1, 4}, {2, 2}}));
    const auto r = smoothness_verdict(m);
    CHECK(r.verdict != Verdict::SMOOTH_CANDIDATE);
    CHECK(r.verdict == Verdict::INCONCLUSIVE);

    // a surviving point stratum is reported as an orbifold
    const Model q = pullback_model(ci_format({4}), weights({{1, 4}, {2, 1}, {3, 1}}));
    const auto rq = smoothness_verdict(q);
    CHECK(rq.verdict == Verdict::ORBIFOLD);
    REQUIRE(rq.orbifold.size() == 1);

    // conservativeness: any non-empty stratum estimate forbids the clean verdict
    for (const auto& s : rq.strata)
        if (!s.empty())
            CHECK(rq.verdict != Verdict::SMOOTH_CANDIDATE);
}
