#include "fano4/formats.hpp"

#include <algorithm>
#include <numeric>

namespace fano4 {

std::string family_name(Family f) {
    switch (f) {
    case Family::CI: return "ci";
    case Family::GR25: return "gr25";
    case Family::GR25_H: return "gr25h";
    case Family::P2XP2: return "p2xp2";
    }
    return "?";
}

std::vector<int> FormatData::equation_degrees() const {
    std::vector<int> d;
    d.reserve(equations.size());
    for (const auto& e : equations)
        d.push_back(e.degree);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> FormatData::entry_degrees_flat() const {
    std::vector<int> d;
    for (const auto& row : weight_matrix)
        d.insert(d.end(), row.begin(), row.end());
    return d;
}

namespace {

void check_shared_parity(const std::vector<int>& doubled) {
    for (std::size_t i = 1; i < doubled.size(); ++i)
        if (((doubled[i] ^ doubled[0]) & 1) != 0)
            throw NonIntegralGrading("half-integer parameters of mixed parity");
}

/* Dense integer polynomial with a base exponent, for the character-series
 * computation (exponents are in doubled-grading units there). */
struct DensePoly {
    int lo = 0;
    std::vector<long long> c; // coefficient of exponent lo + i
};

void add_shifted(DensePoly& dst, const DensePoly& src, int shift) {
    if (src.c.empty())
        return;
    const int lo = src.lo + shift;
    const int hi = lo + static_cast<int>(src.c.size()) - 1;
    if (dst.c.empty()) {
        dst.lo = lo;
        dst.c.assign(src.c.begin(), src.c.end());
        return;
    }
    int nlo = std::min(dst.lo, lo);
    int nhi = std::max(dst.lo + static_cast<int>(dst.c.size()) - 1, hi);
    std::vector<long long> nc(static_cast<std::size_t>(nhi - nlo + 1), 0);
    for (std::size_t i = 0; i < dst.c.size(); ++i)
        nc[static_cast<std::size_t>(dst.lo - nlo) + i] += dst.c[i];
    for (std::size_t i = 0; i < src.c.size(); ++i)
        nc[static_cast<std::size_t>(lo - nlo) + i] += src.c[i];
    dst.lo = nlo;
    dst.c = std::move(nc);
}

/* h_d evaluated at t^{B_1}, t^{B_2}, t^{B_3} for d = 0..dmax, exponents in
 * doubled units (possibly negative). */
std::vector<DensePoly> complete_homogeneous(const std::vector<int>& B, int dmax) {
    std::vector<DensePoly> h(static_cast<std::size_t>(dmax) + 1);
    h[0] = DensePoly{0, {1}};
    for (int w : B)
        for (int d = 1; d <= dmax; ++d)
            add_shifted(h[static_cast<std::size_t>(d)],
                        h[static_cast<std::size_t>(d) - 1], w);
    return h;
}

} // namespace

FormatData ci_format(std::vector<int> degrees) {
    for (int d : degrees)
        if (d <= 1)
            throw DegreeTooSmall("complete-intersection degree " + std::to_string(d) +
                                 " is a coordinate elimination, not a format member");
    std::sort(degrees.begin(), degrees.end());

    FormatData f;
    f.family = Family::CI;
    f.codim = static_cast<int>(degrees.size());
    f.ci_degrees = degrees;
    f.numerator = IntPolynomial::one();
    f.socle_k = 0;
    for (int d : degrees) {
        f.numerator = f.numerator * IntPolynomial{{0, 1}, {d, -1}};
        f.socle_k += d;
        f.equations.push_back(Equation{d, {{d}}, false});
    }
    f.key_variety_dim = -1; // no key variety; Koszul data
    return f;
}

FormatData gr25_format(const PfaffianParams& p) {
    std::vector<int> A = p.a.doubled;
    if (A.size() != 5)
        throw FormatError("gr25_format: need five parameters");
    std::sort(A.begin(), A.end());
    check_shared_parity(A);
    const int S = std::accumulate(A.begin(), A.end(), 0); // doubled sum = 2s = socle k

    FormatData f;
    f.family = Family::GR25;
    f.codim = 3;
    f.key_variety_dim = 6;
    f.doubled_a = A;
    f.socle_k = S;

    // entry degrees w_ij = a_i + a_j, upper triangle
    for (int i = 0; i < 4; ++i) {
        std::vector<int> row;
        for (int j = i + 1; j < 5; ++j) {
            const int w = (A[i] + A[j]) / 2;
            if (A[i] + A[j] <= 0 || w <= 0)
                throw NonPositiveDegree("matrix entry degree a_" + std::to_string(i + 1) +
                                        "+a_" + std::to_string(j + 1) + " is not positive");
            row.push_back(w);
        }
        f.weight_matrix.push_back(std::move(row));
    }

    auto entry = [&](int i, int j) { // i < j, 0-based
        return f.weight_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
    };

    // Pfaffian omitting index i: three complementary pairings of the rest
    f.numerator = IntPolynomial::one();
    for (int i = 0; i < 5; ++i) {
        const int deg = (S - A[i]) / 2; // s - a_i
        if (deg <= 0)
            throw NonPositiveDegree("Pfaffian degree s-a_" + std::to_string(i + 1) +
                                    " is not positive");
        std::vector<int> rest;
        for (int j = 0; j < 5; ++j)
            if (j != i)
                rest.push_back(j);
        Equation eq;
        eq.degree = deg;
        eq.monomial_factor_degrees = {
            {entry(rest[0], rest[1]), entry(rest[2], rest[3])},
            {entry(rest[0], rest[2]), entry(rest[1], rest[3])},
            {entry(rest[0], rest[3]), entry(rest[1], rest[2])}};
        f.equations.push_back(std::move(eq));
        f.numerator.add_term(deg, -1);           // first syzygy at s - a_i
        f.numerator.add_term((S + A[i]) / 2, 1); // dual syzygy at s + a_i
    }
    f.numerator.add_term(S, -1); // socle at 2s
    return f;
}

FormatData p2xp2_format(const SegreParams& p) {
    std::vector<int> B = p.b.doubled, C = p.c.doubled;
    if (B.size() != 3 || C.size() != 3)
        throw FormatError("p2xp2_format: need two triples");
    std::sort(B.begin(), B.end());
    std::sort(C.begin(), C.end());
    std::vector<int> all(B);
    all.insert(all.end(), C.begin(), C.end());
    check_shared_parity(all);

    FormatData f;
    f.family = Family::P2XP2;
    f.codim = 4;
    f.key_variety_dim = 4;
    f.doubled_b = B;
    f.doubled_c = C;
    const int sumB = std::accumulate(B.begin(), B.end(), 0);
    const int sumC = std::accumulate(C.begin(), C.end(), 0);
    f.socle_k = sumB + sumC; // 2(sum b + sum c)

    for (int i = 0; i < 3; ++i) {
        std::vector<int> row;
        for (int j = 0; j < 3; ++j) {
            if (B[i] + C[j] <= 0)
                throw NonPositiveDegree("matrix entry degree b_" + std::to_string(i + 1) +
                                        "+c_" + std::to_string(j + 1) + " is not positive");
            row.push_back((B[i] + C[j]) / 2);
        }
        f.weight_matrix.push_back(std::move(row));
    }
    auto entry = [&](int i, int j) {
        return f.weight_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };

    // nine 2x2 minors: rows i<j, columns k<l
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = k + 1; l < 3; ++l) {
                    Equation eq;
                    eq.degree = (B[i] + B[j] + C[k] + C[l]) / 2;
                    if (eq.degree <= 0)
                        throw NonPositiveDegree("minor degree is not positive");
                    eq.monomial_factor_degrees = {{entry(i, k), entry(j, l)},
                                                  {entry(i, l), entry(j, k)}};
                    f.equations.push_back(std::move(eq));
                }

    /* Numerator from the character series of the Segre cone,
     *   H(t) = sum_d h_d(t^{b_1},t^{b_2},t^{b_3}) h_d(t^{c_1},t^{c_2},t^{c_3}),
     * as N = H * prod (1 - t^{w_ij}) truncated at the socle degree.
     * Everything below runs in doubled exponents. */
    const int k2 = 2 * f.socle_k;
    const int minw2 = B[0] + C[0]; // doubled min entry degree, >= 2
    const int dmax = k2 / minw2;
    auto hb = complete_homogeneous(B, dmax);
    auto hc = complete_homogeneous(C, dmax);

    std::vector<long long> H(static_cast<std::size_t>(k2) + 1, 0);
    for (int d = 0; d <= dmax; ++d) {
        const auto& pb = hb[static_cast<std::size_t>(d)];
        const auto& pc = hc[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < pb.c.size(); ++i) {
            if (pb.c[i] == 0)
                continue;
            for (std::size_t j = 0; j < pc.c.size(); ++j) {
                const int e = pb.lo + static_cast<int>(i) + pc.lo + static_cast<int>(j);
                if (e >= 0 && e <= k2)
                    H[static_cast<std::size_t>(e)] += pb.c[i] * pc.c[j];
            }
        }
    }

    IntPolynomial prod = IntPolynomial::one();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            prod = prod * IntPolynomial{{0, 1}, {2 * entry(i, j), -1}};

    IntPolynomial numerator;
    for (const auto& [e, c] : prod.terms())
        for (int m = 0; m + e <= k2; ++m) {
            if (H[static_cast<std::size_t>(m)] == 0)
                continue;
            const int tot = e + m;
            if ((tot & 1) != 0)
                throw NonIntegralGrading("character series produced a non-integral degree");
            numerator.add_term(tot / 2, c * H[static_cast<std::size_t>(m)]);
        }

    if (numerator.coeff(0) != 1 || !palindromy_check(numerator, f.socle_k))
        throw FormatError("p2xp2_format: numerator failed the Gorenstein certificate");
    f.numerator = numerator;
    return f;
}

FormatData with_hypersurface(FormatData f, int h) {
    if (f.family != Family::GR25)
        throw FormatError("with_hypersurface: only defined on the Gr(2,5) format");
    if (h <= 1)
        throw DegreeTooSmall("hypersurface degree must be at least 2");
    f.family = Family::GR25_H;
    f.codim += 1;
    f.socle_k += h;
    f.numerator = f.numerator * IntPolynomial{{0, 1}, {h, -1}};
    f.equations.push_back(Equation{h, {{h}}, true});
    f.hypersurface_degrees.push_back(h);
    return f;
}

} // namespace fano4
