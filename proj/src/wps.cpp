#include "fano4/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fano4 {

WeightVector normalized(WeightVector w) {
    for (int x : w)
        if (x < 1)
            throw std::invalid_argument("weights must be positive");
    std::sort(w.begin(), w.end());
    return w;
}

bool ambient_wellformed(const WeightVector& w) {
    const std::size_t m = w.size();
    if (m < 2)
        throw std::invalid_argument("ambient_wellformed: need at least two weights");
    // gcd of every (m-1)-subset via prefix/suffix gcds
    std::vector<int> pre(m + 1, 0), suf(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        pre[i + 1] = std::gcd(pre[i], w[i]);
    for (std::size_t i = m; i-- > 0;)
        suf[i] = std::gcd(suf[i + 1], w[i]);
    for (std::size_t i = 0; i < m; ++i)
        if (std::gcd(pre[i], suf[i + 1]) != 1)
            return false;
    return true;
}

namespace {

std::vector<int> prime_factors_of_any(const WeightVector& w) {
    std::set<int> primes;
    for (int x : w) {
        int n = x;
        for (int p = 2; p * p <= n; ++p)
            while (n % p == 0) {
                primes.insert(p);
                n /= p;
            }
        if (n > 1)
            primes.insert(n);
    }
    return {primes.begin(), primes.end()};
}

} // namespace

std::vector<Stratum> singular_strata(const WeightVector& w) {
    std::vector<Stratum> out;
    for (int p : prime_factors_of_any(w)) {
        Stratum s;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] % p == 0)
                s.indices.push_back(static_cast<int>(i));
        int g = 0;
        for (int i : s.indices)
            g = std::gcd(g, w[i]);
        s.stabilizer = g;
        out.push_back(std::move(s));
    }
    // keep only maximal index sets, each once
    std::vector<Stratum> maximal;
    for (const auto& s : out) {
        bool dominated = false;
        for (const auto& t : out)
            if (&s != &t && s.indices != t.indices &&
                std::includes(t.indices.begin(), t.indices.end(),
                              s.indices.begin(), s.indices.end()))
                dominated = true;
        bool dup = std::any_of(maximal.begin(), maximal.end(),
                               [&](const Stratum& t) { return t.indices == s.indices; });
        if (!dominated && !dup)
            maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Stratum& a, const Stratum& b) { return a.indices < b.indices; });
    return maximal;
}

bool semigroup_contains(const std::vector<int>& generators, int d) {
    if (d < 0)
        return false;
    if (d == 0)
        return true;
    std::vector<char> reach(d + 1, 0);
    reach[0] = 1;
    for (int g : generators) {
        if (g <= 0)
            throw std::invalid_argument("semigroup_contains: generators must be positive");
        if (g > d)
            continue;
        for (int n = g; n <= d; ++n)
            if (reach[n - g])
                reach[n] = 1;
    }
    return reach[d] != 0;
}

std::vector<Stratum> base_locus_strata(const WeightVector& w, int d) {
    if (d <= 0)
        throw std::invalid_argument("base_locus_strata: degree must be positive");
    // A maximal base-locus stratum is a union of full weight classes, so
    // scan subsets of the distinct weight values.
    std::vector<int> values(w.begin(), w.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t v = values.size();

    std::vector<unsigned> failing;
    for (unsigned mask = 1; mask < (1u << v); ++mask) {
        std::vector<int> gens;
        for (std::size_t i = 0; i < v; ++i)
            if (mask & (1u << i))
                gens.push_back(values[i]);
        if (!semigroup_contains(gens, d))
            failing.push_back(mask);
    }
    std::vector<Stratum> out;
    for (unsigned mask : failing) {
        bool maximal = true;
        for (unsigned other : failing)
            if (other != mask && (other & mask) == mask)
                maximal = false;
        if (!maximal)
            continue;
        Stratum s;
        int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < v; ++j)
                if ((mask & (1u << j)) && w[i] == values[j]) {
                    s.indices.push_back(static_cast<int>(i));
                    g = std::gcd(g, w[i]);
                }
        }
        s.stabilizer = g;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const Stratum& a, const Stratum& b) { return a.indices < b.indices; });
    return out;
}

std::vector<int> stratum_weights(const WeightVector& w, const Stratum& s) {
    std::vector<int> out;
    out.reserve(s.indices.size());
    for (int i : s.indices)
        out.push_back(w.at(static_cast<std::size_t>(i)));
    return out;
}

} // namespace fano4
