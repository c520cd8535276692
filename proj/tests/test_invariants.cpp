#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano4/invariants.hpp"

using namespace fano4;

namespace {

WeightVector ones(int n) { return WeightVector(static_cast<std::size_t>(n), 1); }

WeightVector weights(std::initializer_list<std::pair<int, int>> classes) {
    WeightVector w;
    for (auto [v, n] : classes)
        w.insert(w.end(), static_cast<std::size_t>(n), v);
    return w;
}

Model row3() {
    return pullback_model(gr25_format(PfaffianParams{HalfIntVector{{1, 1, 1, 3, 3}}}),
                          weights({{1, 6}, {2, 2}}));
}

Model row1() {
    return pullback_model(gr25_format(PfaffianParams{HalfIntVector{{1, 1, 1, 1, 3}}}),
                          ones(8));
}

Model row6() {
    return pullback_model(
        with_hypersurface(gr25_format(PfaffianParams{HalfIntVector{{1, 1, 1, 1, 1}}}), 4),
        weights({{1, 8}, {2, 1}}));
}

Model x5() { return pullback_model(ci_format({5}), ones(6)); }

} // namespace

TEST_CASE("anticanonical_degree") {
    CHECK(anticanonical_degree(row3()) == Rational(7));

    // plain P^4: numerator 1 over five weight-1 coordinates
    Model p4;
    p4.format = FormatData{};
    p4.format.numerator = IntPolynomial::one();
    p4.ambient = ones(5);
    CHECK(anticanonical_degree(p4) == Rational(1));

    CHECK(anticanonical_degree(row6()) == Rational(10));

    // weighted projective 4-space has degree 1/prod(w)
    Model wp;
    wp.format.numerator = IntPolynomial::one();
    wp.ambient = weights({{1, 3}, {2, 1}, {5, 1}});
    CHECK(anticanonical_degree(wp) == Rational(1, 10));

    // X_10 in P(1^4,2,5): degree 10/10 = 1
    const Model x10 = pullback_model(ci_format({10}), weights({{1, 4}, {2, 1}, {5, 1}}));
    CHECK(anticanonical_degree(x10) == Rational(1));

    // six ambient weights with a numerator lacking the matching vanishing
    // order at t=1 signal a dimension mismatch
    Model bad;
    bad.format.numerator = IntPolynomial::one();
    bad.ambient = ones(6);
    CHECK_THROWS_AS(anticanonical_degree(bad), DimensionMismatch);
}

TEST_CASE("plurigenera") {
    const auto r1 = plurigenera(row1(), 2);
    CHECK(r1.coeffs == std::vector<Int>{1, 8, 35});

    const auto q = plurigenera(x5(), 2);
    CHECK(q.coeffs == std::vector<Int>{1, 6, 21});

    const Model r5 = pullback_model(
        with_hypersurface(gr25_format(PfaffianParams{HalfIntVector{{1, 1, 1, 1, 1}}}), 3),
        ones(9));
    CHECK(plurigenera(r5, 1).coeffs == std::vector<Int>{1, 9});
}

TEST_CASE("c2K2_from") {
    CHECK(c2K2_from(6, Rational(5)) == Rational(50));
    CHECK(c2K2_from(8, Rational(13)) == Rational(58));
    // h0 = 1 + K4/6 with c2K2 = 0: pick K4 = 12, h0 = 3
    CHECK(c2K2_from(3, Rational(12)) == Rational(0));
}

TEST_CASE("c2K2 for the quintic against the Chern-class oracle") {
    // c(X) = (1+H)^6 / (1+5H) restricted to X: c2 = (15 - 30 + 25) H^2 = 10 H^2,
    // so c2.H^2 = 10 * deg = 10 * 5 = 50
    const auto inv = invariant_record(x5());
    CHECK(inv.c2K2 == Rational(50));
    CHECK(inv.degree_K4 == Rational(5));
    CHECK(inv.h0[1] == 6);
}

TEST_CASE("rr_consistency") {
    CHECK(rr_consistency(row1(), 2));
    CHECK(rr_consistency(row1(), 10));
    CHECK(rr_consistency(x5(), 10));

    // zeroing the t^5 term destroys the degree-4 pole at t=1 outright
    Model bad = row1();
    bad.format.numerator.add_term(5, -bad.format.numerator.coeff(5));
    CHECK_THROWS_AS(rr_consistency(bad, 10), DimensionMismatch);

    // a perturbation that keeps the pole order but changes the plurigenera
    // must be caught by the consistency check itself
    Model skew = row1();
    IntPolynomial bump = IntPolynomial::one();
    for (int i = 0; i < 5; ++i)
        bump = bump * IntPolynomial{{0, 1}, {1, -1}}; // (1-t)^5
    skew.format.numerator = skew.format.numerator + bump;
    CHECK_FALSE(rr_consistency(skew, 10));
}

TEST_CASE("rr formula value at n=2 for the first Pfaffian family") {
    // h0(-2K) = 1 + 6/24*58 + 36/24*13 = 35, independently via the series
    const auto inv = invariant_record(row1());
    CHECK(inv.h0[2] == 35);
    CHECK(Rational(1) + Rational(6, 24) * inv.c2K2 + Rational(36, 24) * inv.degree_K4 ==
          Rational(35));
}

TEST_CASE("distinguishable") {
    const auto r1 = invariant_record(row1()); // (8, 13)
    const Model m5 = pullback_model(
        with_hypersurface(gr25_format(PfaffianParams{HalfIntVector{{1, 1, 1, 1, 1}}}), 3),
        ones(9));
    const auto r5 = invariant_record(m5); // (9, 15)
    CHECK(distinguishable(r1, r5));
    CHECK_FALSE(distinguishable(r1, r1));

    // equal h0 but different K4 is not enough
    const Model r2m = pullback_model(
        gr25_format(PfaffianParams{HalfIntVector{{0, 2, 2, 2, 2}}}),
        weights({{1, 7}, {2, 1}}));
    const Model r9m = pullback_model(
        p2xp2_format(SegreParams{HalfIntVector{{1, 1, 3}}, HalfIntVector{{1, 1, 3}}}),
        weights({{1, 7}, {2, 2}}));
    const auto r2 = invariant_record(r2m), r9 = invariant_record(r9m);
    CHECK(r2.family_key() == r9.family_key()); // both (7, 10)
    CHECK_FALSE(distinguishable(r2, r9));
}

TEST_CASE("small_invariants") {
    InvariantRecord r;
    r.h0.order = 1;
    auto with = [&](long long h, long long k4) {
        r.h0.coeffs = {Int(1), Int(h)};
        r.degree_K4 = Rational(k4);
        return small_invariants(r);
    };
    CHECK(with(9, 17));
    CHECK(with(3, 1));
    CHECK_FALSE(with(10, 18));
    CHECK_FALSE(with(2, 5));
    CHECK_FALSE(with(5, 0));
}
