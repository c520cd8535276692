#include "fano4/exactring.hpp"

#include <sstream>

namespace fano4 {

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<const int, Int>> terms) {
    for (const auto& [e, c] : terms)
        add_term(e, c);
}

IntPolynomial IntPolynomial::one() {
    return IntPolynomial{{0, 1}};
}

IntPolynomial IntPolynomial::monomial(Int coeff, int exponent) {
    IntPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

int IntPolynomial::degree() const {
    if (terms_.empty())
        throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

int IntPolynomial::low_exponent() const {
    if (terms_.empty())
        throw std::logic_error("low exponent of zero polynomial");
    return terms_.begin()->first;
}

Int IntPolynomial::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(int exponent, const Int& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Int IntPolynomial::value_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

std::string IntPolynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (e == 0)
            os << a;
        else {
            if (a != 1)
                os << a << "*";
            os << "t^" << e;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, -c);
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    return p * q;
}

IntPolynomial poly_divide_exact(const IntPolynomial& p, int d) {
    if (d <= 0)
        throw std::invalid_argument("poly_divide_exact: d must be positive");
    if (p.is_zero())
        return p;
    if (p.low_exponent() < 0)
        throw NotDivisible("poly_divide_exact: negative exponents");

    // p = (1 - t^d) q  <=>  q_n = p_n + q_{n-d}
    const int deg = p.degree();
    std::vector<Int> q(deg + 1, 0);
    for (int n = 0; n <= deg; ++n) {
        q[n] = p.coeff(n);
        if (n >= d)
            q[n] += q[n - d];
    }
    IntPolynomial quot;
    for (int n = 0; n <= deg; ++n)
        quot.add_term(n, q[n]);

    IntPolynomial divisor{{0, 1}, {d, -1}};
    if (quot * divisor != p)
        throw NotDivisible("poly_divide_exact: (1 - t^" + std::to_string(d) +
                           ") does not divide " + p.str());
    return quot;
}

CoefficientStream series_expand(const IntPolynomial& numerator,
                                const std::vector<int>& denominator_weights,
                                int order) {
    if (order < 0)
        throw std::invalid_argument("series_expand: negative order");
    for (int w : denominator_weights)
        if (w <= 0)
            throw std::invalid_argument("series_expand: weights must be positive");

    CoefficientStream s;
    s.order = order;
    s.coeffs.assign(order + 1, 0);
    for (const auto& [e, c] : numerator.terms()) {
        if (e < 0)
            throw std::invalid_argument("series_expand: numerator has negative exponents");
        if (e <= order)
            s.coeffs[e] = c;
    }
    // each weight contributes a factor 1/(1-t^w): a prefix-sum recurrence
    for (int w : denominator_weights)
        for (int n = w; n <= order; ++n)
            s.coeffs[n] += s.coeffs[n - w];
    return s;
}

bool palindromy_check(const IntPolynomial& p, int k) {
    if (p.is_zero())
        return true;
    bool plus = true, minus = true;
    for (const auto& [e, c] : p.terms()) {
        const Int mirror = p.coeff(k - e);
        if (mirror != c)
            plus = false;
        if (mirror != -c)
            minus = false;
        if (!plus && !minus)
            return false;
    }
    return plus || minus;
}

} // namespace fano4
