#pragma once

#include <vector>

namespace fano4 {

/* Weights of an ambient weighted projective space, kept sorted
 * non-decreasing. */
using WeightVector = std::vector<int>;

WeightVector normalized(WeightVector w);

/* A coordinate stratum of the ambient, singular iff stabilizer > 1. */
struct Stratum {
    std::vector<int> indices; // sorted coordinate indices, non-empty
    int stabilizer = 1;       // gcd of the selected weights

    int dimension() const { return static_cast<int>(indices.size()) - 1; }
    bool operator==(const Stratum&) const = default;
};

/* Ambient criterion: every (m-1)-subset of the weights is coprime. */
bool ambient_wellformed(const WeightVector& w);

/* Maximal index subsets whose weights share a common factor > 1. */
std::vector<Stratum> singular_strata(const WeightVector& w);

/* True iff d is a non-negative integer combination of the generators. */
bool semigroup_contains(const std::vector<int>& generators, int d);

/* Maximal strata on which every degree-d monomial vanishes. The returned
 * strata may have stabilizer 1; they are unions of full weight classes. */
std::vector<Stratum> base_locus_strata(const WeightVector& w, int d);

/* Weights selected by a stratum. */
std::vector<int> stratum_weights(const WeightVector& w, const Stratum& s);

} // namespace fano4
