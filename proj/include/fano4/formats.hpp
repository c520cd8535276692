#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fano4/exactring.hpp"

namespace fano4 {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeTooSmall : FormatError {
    using FormatError::FormatError;
};
struct NonIntegralGrading : FormatError {
    using FormatError::FormatError;
};
struct NonPositiveDegree : FormatError {
    using FormatError::FormatError;
};

enum class Family { CI, GR25, GR25_H, P2XP2 };

std::string family_name(Family f);

/* Half-integers stored doubled; all entries must share parity so that the
 * pairwise sums appearing as matrix entry degrees are integers. */
struct HalfIntVector {
    std::vector<int> doubled;
};

struct PfaffianParams {
    HalfIntVector a; // length 5, a_i + a_j > 0 for i < j
};

struct SegreParams {
    HalfIntVector b; // length 3
    HalfIntVector c; // length 3, b_i + c_j > 0
};

/* One defining equation, described by its degree and by the degrees of the
 * factors of its monomials. A general form of degree d is {{d}}; a Pfaffian
 * or minor lists its products of matrix entries. The strata checker uses the
 * factor degrees to decide whether an equation restricts non-trivially to a
 * coordinate stratum. */
struct Equation {
    int degree = 0;
    std::vector<std::vector<int>> monomial_factor_degrees;
    bool parenthesized = false; // hypersurface/section degrees, reported as "(d)"

    bool operator==(const Equation&) const = default;
};

struct FormatData {
    Family family = Family::CI;
    int codim = 0;
    std::vector<std::vector<int>> weight_matrix; // entry degrees (empty for CI)
    std::vector<Equation> equations;
    int socle_k = 0;
    IntPolynomial numerator;
    int key_variety_dim = 0;

    // canonicalized parameters, kept for dedup and serialization
    std::vector<int> doubled_a;
    std::vector<int> doubled_b;
    std::vector<int> doubled_c;
    std::vector<int> ci_degrees;
    std::vector<int> hypersurface_degrees;

    std::vector<int> equation_degrees() const; // sorted, includes parenthesized
    std::vector<int> entry_degrees_flat() const;
};

FormatData ci_format(std::vector<int> degrees);
FormatData gr25_format(const PfaffianParams& p);
FormatData p2xp2_format(const SegreParams& p);

/* Non-quasilinear hypersurface section of the Gr(2,5) format. */
FormatData with_hypersurface(FormatData f, int h);

} // namespace fano4
