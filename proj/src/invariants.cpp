#include "fano4/invariants.hpp"

namespace fano4 {

Rational anticanonical_degree(const Model& m) {
    const int extra = static_cast<int>(m.ambient.size()) - 5;
    if (extra < 0)
        throw DimensionMismatch("anticanonical_degree: fewer than five ambient weights");
    IntPolynomial q = m.format.numerator;
    try {
        for (int i = 0; i < extra; ++i)
            q = poly_divide_exact(q, 1);
    } catch (const NotDivisible&) {
        throw DimensionMismatch("anticanonical_degree: Hilbert series does not have a "
                                "4-dimensional pole at t=1");
    }
    Int denom = 1;
    for (int w : m.ambient)
        denom *= w;
    return Rational(q.value_at_one(), denom);
}

CoefficientStream plurigenera(const Model& m, int order) {
    return series_expand(m.format.numerator, m.ambient, order);
}

Rational c2K2_from(const Int& h0_1, const Rational& k4) {
    return Rational(12) * Rational(h0_1 - 1) - Rational(2) * k4;
}

namespace {

bool rr_matches(const CoefficientStream& h0, const Rational& k4, const Rational& c2k2,
                int n_max) {
    for (int n = 1; n <= n_max && n <= h0.order; ++n) {
        const Rational nn(n);
        const Rational pred = Rational(1) + nn * (nn + 1) / 24 * c2k2 +
                              nn * nn * (nn + 1) * (nn + 1) / 24 * k4;
        if (Rational(h0[static_cast<std::size_t>(n)]) != pred)
            return false;
    }
    return true;
}

} // namespace

bool rr_consistency(const Model& m, int n_max) {
    const Rational k4 = anticanonical_degree(m);
    const CoefficientStream h0 = plurigenera(m, n_max);
    const Rational c2k2 = c2K2_from(h0[1], k4);
    return rr_matches(h0, k4, c2k2, n_max);
}

InvariantRecord invariant_record(const Model& m, int n_max) {
    InvariantRecord r;
    r.h0 = plurigenera(m, n_max);
    r.degree_K4 = anticanonical_degree(m);
    r.c2K2 = c2K2_from(r.h0[1], r.degree_K4);
    r.rr_consistent = rr_matches(r.h0, r.degree_K4, r.c2K2, n_max);
    r.small = small_invariants(r);
    return r;
}

bool distinguishable(const InvariantRecord& a, const InvariantRecord& b) {
    return a.h0[1] != b.h0[1] && a.degree_K4 != b.degree_K4;
}

bool small_invariants(const InvariantRecord& r) {
    return r.degree_K4 >= 1 && r.degree_K4 <= 17 && r.h0[1] >= 3 && r.h0[1] <= 9;
}

} // namespace fano4
