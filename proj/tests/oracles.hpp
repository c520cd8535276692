#pragma once

// Independent combinatorial oracles used to cross-check the closed-form
// Hilbert numerators. These deliberately avoid the production code paths:
// the Plücker oracle counts standard monomials directly, and the Segre
// oracle enumerates monomial pairs by brute force.

#include <array>
#include <map>
#include <vector>

#include "fano4/numeric.hpp"

namespace oracles {

/* Coefficients through t^order of the Hilbert series of the weighted
 * Gr(2,5) coordinate ring with doubled parameters A (sorted, shared parity).
 * Basis: standard monomials = multichains of index pairs (i<j) under the
 * componentwise order, each pair weighted by a_i + a_j. */
inline std::vector<fano4::Int> pluecker_counts(const std::vector<int>& A, int order) {
    std::vector<std::array<int, 2>> pairs;
    std::vector<int> weight;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            pairs.push_back({i, j});
            weight.push_back((A[i] + A[j]) / 2);
        }
    const std::size_t np = pairs.size();
    // g[p][n] = multichains of total weight n whose last element is pairs[p]
    std::vector<std::vector<fano4::Int>> g(np, std::vector<fano4::Int>(order + 1, 0));
    for (int n = 1; n <= order; ++n)
        for (std::size_t p = 0; p < np; ++p) {
            const int w = weight[p];
            if (n < w)
                continue;
            fano4::Int total = (n == w) ? 1 : 0;
            for (std::size_t q = 0; q < np; ++q)
                if (pairs[q][0] <= pairs[p][0] && pairs[q][1] <= pairs[p][1])
                    total += g[q][static_cast<std::size_t>(n - w)];
            g[p][static_cast<std::size_t>(n)] = total;
        }
    std::vector<fano4::Int> h(static_cast<std::size_t>(order) + 1, 0);
    h[0] = 1;
    for (int n = 1; n <= order; ++n)
        for (std::size_t p = 0; p < np; ++p)
            h[static_cast<std::size_t>(n)] += g[p][static_cast<std::size_t>(n)];
    return h;
}

namespace detail {

/* Doubled-weight histogram of degree-d monomials in three variables with
 * doubled weights W (possibly negative). */
inline std::map<int, fano4::Int> monomial_weights(const std::vector<int>& W, int d) {
    std::map<int, fano4::Int> hist;
    for (int e0 = 0; e0 <= d; ++e0)
        for (int e1 = 0; e0 + e1 <= d; ++e1) {
            const int e2 = d - e0 - e1;
            hist[e0 * W[0] + e1 * W[1] + e2 * W[2]] += 1;
        }
    return hist;
}

} // namespace detail

/* Coefficients through t^order of the Hilbert series of the Segre-cone ring
 * over P²×P² with doubled parameters B, C: degree-n piece is spanned by pairs
 * (monomial of degree d in the b-variables, monomial of degree d in the
 * c-variables) of total weight n. */
inline std::vector<fano4::Int> segre_counts(const std::vector<int>& B,
                                            const std::vector<int>& C, int order) {
    std::vector<fano4::Int> h(static_cast<std::size_t>(order) + 1, 0);
    h[0] = 1;
    const int cap2 = 2 * order; // doubled-weight cap
    const int minw2 = B[0] + C[0]; // minimal doubled pair weight, positive
    for (int d = 1; d * minw2 <= cap2; ++d) {
        const auto hb = detail::monomial_weights(B, d);
        const auto hc = detail::monomial_weights(C, d);
        for (const auto& [i, cb] : hb)
            for (const auto& [j, cc] : hc) {
                const int tot = i + j;
                if (tot >= 0 && tot <= cap2 && tot % 2 == 0)
                    h[static_cast<std::size_t>(tot / 2)] += cb * cc;
            }
    }
    return h;
}

} // namespace oracles
