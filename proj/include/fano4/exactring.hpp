#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fano4/numeric.hpp"

namespace fano4 {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Sparse univariate polynomial with exact integer coefficients.
 * No zero coefficients are ever stored. Negative exponents are allowed
 * (needed for intermediate character computations); every public Hilbert
 * numerator has non-negative support. */
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::pair<const int, Int>> terms);

    static IntPolynomial one();
    static IntPolynomial monomial(Int coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;       // max exponent; polynomial must be nonzero
    int low_exponent() const; // min exponent; polynomial must be nonzero
    Int coeff(int exponent) const;
    const std::map<int, Int>& terms() const { return terms_; }

    void add_term(int exponent, const Int& c);

    Int value_at_one() const;
    std::string str() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial&) const = default;

private:
    std::map<int, Int> terms_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);

/* Exact division of p by (1 - t^d). Throws NotDivisible when there is a
 * remainder. The quotient is verified by re-multiplication. */
IntPolynomial poly_divide_exact(const IntPolynomial& p, int d);

/* Coefficients of a power series truncated at t^order (inclusive). */
struct CoefficientStream {
    std::vector<Int> coeffs;
    int order = 0;

    const Int& operator[](std::size_t n) const { return coeffs[n]; }
    bool operator==(const CoefficientStream&) const = default;
};

/* Expansion of numerator / prod_i (1 - t^{w_i}) through t^order. */
CoefficientStream series_expand(const IntPolynomial& numerator,
                                const std::vector<int>& denominator_weights,
                                int order);

/* True iff t^k * p(1/t) == p(t) or == -p(t). */
bool palindromy_check(const IntPolynomial& p, int k);

} // namespace fano4
