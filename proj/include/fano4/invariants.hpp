#pragma once

#include <utility>

#include "fano4/model.hpp"

namespace fano4 {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantRecord {
    CoefficientStream h0;  // h^0(-nK) for n = 0..order
    Rational degree_K4;    // (-K)^4
    Rational c2K2;         // (-K)^2 c_2
    bool rr_consistent = false;
    bool small = false;    // inside the small-invariants window

    std::pair<Int, Rational> family_key() const { return {h0[1], degree_K4}; }
};

/* (-K)^4 as the value at t=1 of numerator/(1-t)^{m-5} divided by the product
 * of the ambient weights; exact division failing signals wrong dimension. */
Rational anticanonical_degree(const Model& m);

CoefficientStream plurigenera(const Model& m, int order);

/* (-K)^2 c_2 from the n=1 Riemann-Roch value h^0(-K). */
Rational c2K2_from(const Int& h0_1, const Rational& k4);

/* True iff h^0(-nK) matches 1 + n(n+1)/24 c2K2 + n^2(n+1)^2/24 K^4 for all
 * 1 <= n <= n_max, with c2K2 fixed from n = 1. */
bool rr_consistency(const Model& m, int n_max);

InvariantRecord invariant_record(const Model& m, int n_max = 10);

/* Deformation families are distinct when BOTH invariants differ. */
bool distinguishable(const InvariantRecord& a, const InvariantRecord& b);

/* 1 <= (-K)^4 <= 17 and 3 <= h^0(-K) <= 9. */
bool small_invariants(const InvariantRecord& r);

} // namespace fano4
