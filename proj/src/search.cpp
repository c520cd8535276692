#include "fano4/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

namespace fano4 {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    formats += o.formats;
    scanned += o.scanned;
    representable += o.representable;
    k4_integral += o.k4_integral;
    rr_consistent += o.rr_consistent;
    wellformed += o.wellformed;
    orbifold_rejected += o.orbifold_rejected;
    smooth += o.smooth;
    inconclusive += o.inconclusive;
    emitted += o.emitted;
    return *this;
}

nlohmann::json SearchStats::to_json() const {
    return {{"formats", formats},
            {"scanned", scanned},
            {"representable", representable},
            {"k4_integral", k4_integral},
            {"rr_consistent", rr_consistent},
            {"wellformed", wellformed},
            {"orbifold_rejected", orbifold_rejected},
            {"smooth", smooth},
            {"inconclusive", inconclusive},
            {"emitted", emitted}};
}

std::vector<int> CandidateRecord::params_key() const {
    std::vector<int> key;
    switch (format.family) {
    case Family::CI:
        key = format.ci_degrees;
        break;
    case Family::GR25:
    case Family::GR25_H:
        key = format.doubled_a;
        key.insert(key.end(), format.hypersurface_degrees.begin(),
                   format.hypersurface_degrees.end());
        break;
    case Family::P2XP2:
        key = format.doubled_b;
        key.insert(key.end(), format.doubled_c.begin(), format.doubled_c.end());
        break;
    }
    return key;
}

namespace {

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

long long rational_to_ll(const Rational& x) {
    return (boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x))
        .convert_to<long long>();
}

} // namespace

nlohmann::json CandidateRecord::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(format.family);
    nlohmann::json params;
    if (format.family == Family::CI)
        params["degrees"] = format.ci_degrees;
    else if (format.family == Family::P2XP2) {
        params["b2"] = format.doubled_b;
        params["c2"] = format.doubled_c;
    } else {
        params["a2"] = format.doubled_a;
        if (!format.hypersurface_degrees.empty())
            params["h"] = format.hypersurface_degrees;
    }
    j["params"] = params;
    j["ambient"] = ambient;
    j["eq_degrees"] = format.equation_degrees();
    j["socle_k"] = format.socle_k;
    std::vector<long long> h0;
    for (const auto& c : invariants.h0.coeffs)
        h0.push_back(to_ll(c));
    j["h0"] = h0;
    j["K4"] = rational_to_ll(invariants.degree_K4);
    j["c2K2"] = rational_to_ll(invariants.c2K2);
    j["rr_consistent"] = invariants.rr_consistent;
    j["verdict"] = verdict_name(report.verdict);
    j["family_key"] = {to_ll(invariants.h0[1]), rational_to_ll(invariants.degree_K4)};
    std::vector<std::string> hist;
    for (const auto& s : history)
        hist.push_back(s.str());
    j["history"] = hist;
    j["filter_trail"] = {{"index_one", trail.index_one},
                         {"k4_positive_integer", trail.k4_positive_integer},
                         {"rr_consistent", trail.rr_consistent},
                         {"wellformed", trail.wellformed},
                         {"verdict", verdict_name(trail.verdict)}};
    return j;
}

namespace {

void multisets_rec(int len, int lo, int hi, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        multisets_rec(len, v, hi, cur, emit);
        cur.pop_back();
    }
}

void enumerate_ci(const SearchSpec& spec, std::vector<FormatData>& out) {
    for (int codim = 1; codim <= spec.ci_max_codim; ++codim) {
        std::vector<int> cur;
        multisets_rec(codim, 2, spec.max_equation_degree, cur,
                      [&](const std::vector<int>& degs) { out.push_back(ci_format(degs)); });
    }
}

void enumerate_gr25(const SearchSpec& spec, std::vector<FormatData>& out,
                    std::vector<FormatData>* hyp_out) {
    const int m = spec.max_doubled_param;
    std::vector<int> cur;
    auto emit = [&](const std::vector<int>& A) {
        if (A[0] + A[1] <= 0)
            return; // smallest pairwise sum
        const int S = A[0] + A[1] + A[2] + A[3] + A[4];
        if (S - A[4] < 2)
            return; // some Pfaffian degree below 1
        if ((S - A[0]) / 2 > spec.max_equation_degree)
            return;
        FormatData f = gr25_format(PfaffianParams{HalfIntVector{A}});
        if (hyp_out) {
            for (int h = 2; h <= spec.max_hypersurface_degree; ++h)
                if (h <= spec.max_equation_degree)
                    hyp_out->push_back(with_hypersurface(f, h));
        } else {
            out.push_back(std::move(f));
        }
    };
    for (int parity = 0; parity <= 1; ++parity) {
        int lo = -m;
        if (((lo % 2) + 2) % 2 != parity)
            ++lo;
        // sorted tuples with fixed parity
        std::vector<int> values;
        for (int v = lo; v <= m; v += 2)
            values.push_back(v);
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == 5) {
                emit(cur);
                return;
            }
            for (std::size_t i = start; i < values.size(); ++i) {
                cur.push_back(values[i]);
                rec(i);
                cur.pop_back();
            }
        };
        rec(0);
    }
}

void enumerate_p2xp2(const SearchSpec& spec, std::vector<FormatData>& out) {
    const int m = spec.max_doubled_param;
    // b is shift-normalized to b_1 in {1/2, 1}; (b,c) vs the normalized
    // (c,b) swap is deduplicated lexicographically
    auto shift_normalized_first = [](int c0) {
        const int parity = ((c0 % 2) + 2) % 2;
        return parity == 1 ? 1 : 2;
    };
    for (int b0 = 1; b0 <= 2; ++b0) {
        const int parity = b0 % 2;
        for (int b1 = b0; b1 <= m; b1 += 2)
            for (int b2 = b1; b2 <= m; b2 += 2) {
                int clo = -m;
                if (((clo % 2) + 2) % 2 != parity)
                    ++clo;
                for (int c0 = clo; c0 <= m; c0 += 2) {
                    if (b0 + c0 <= 0)
                        continue;
                    for (int c1 = c0; c1 <= m; c1 += 2)
                        for (int c2 = c1; c2 <= m; c2 += 2) {
                            const std::vector<int> B{b0, b1, b2}, C{c0, c1, c2};
                            if ((b1 + b2 + c1 + c2) / 2 > spec.max_equation_degree)
                                continue;
                            // canonical representative under the swap symmetry
                            const int delta = c0 - shift_normalized_first(c0);
                            std::vector<int> sw;
                            for (int v : C)
                                sw.push_back(v - delta);
                            for (int v : B)
                                sw.push_back(v + delta);
                            std::vector<int> cat(B);
                            cat.insert(cat.end(), C.begin(), C.end());
                            const bool swapped_in_bounds =
                                std::all_of(sw.begin(), sw.end(),
                                            [&](int v) { return v >= -m && v <= m; });
                            if (swapped_in_bounds && sw < cat)
                                continue;
                            out.push_back(p2xp2_format(
                                SegreParams{HalfIntVector{B}, HalfIntVector{C}}));
                        }
                }
            }
    }
}

} // namespace

std::vector<FormatData> enumerate_params(const SearchSpec& spec) {
    std::vector<FormatData> out;
    for (Family fam : spec.families) {
        switch (fam) {
        case Family::CI:
            enumerate_ci(spec, out);
            break;
        case Family::GR25:
            enumerate_gr25(spec, out, nullptr);
            break;
        case Family::GR25_H:
            enumerate_gr25(spec, out, &out);
            break;
        case Family::P2XP2:
            enumerate_p2xp2(spec, out);
            break;
        }
    }
    return out;
}

std::vector<WeightVector> compatible_ambients(const FormatData& f, const SearchSpec& spec) {
    const int n = 5 + f.codim;
    const int target = f.socle_k + 1;
    std::vector<WeightVector> out;
    if (target < n || spec.max_ambient_weight < 1)
        return out;

    std::vector<int> degrees = f.entry_degrees_flat();
    for (const auto& eq : f.equations)
        degrees.push_back(eq.degree);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int lo) {
        const int slots = n - static_cast<int>(cur.size());
        if (slots == 0) {
            if (remaining != 0)
                return;
            std::vector<int> values(cur);
            values.erase(std::unique(values.begin(), values.end()), values.end());
            for (int d : degrees)
                if (!semigroup_contains(values, d))
                    return;
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= spec.max_ambient_weight; ++v) {
            if (v * slots > remaining)
                break; // parts are non-decreasing from here on
            if (remaining - v > (slots - 1) * spec.max_ambient_weight)
                continue;
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(target, 1);
    return out;
}

namespace {

struct FormatOutcome {
    std::vector<CandidateRecord> records;
    SearchStats stats;
};

FormatOutcome process_format(const FormatData& f, const SearchSpec& spec) {
    FormatOutcome out;
    out.stats.formats = 1;

    // count raw partitions too, so pruning is visible in the stats
    {
        const int n = 5 + f.codim;
        const int target = f.socle_k + 1;
        std::vector<int> cur;
        std::function<std::uint64_t(int, int, int)> count = [&](int remaining, int lo,
                                                                int slots) -> std::uint64_t {
            if (slots == 0)
                return remaining == 0 ? 1 : 0;
            std::uint64_t total = 0;
            for (int v = lo; v <= spec.max_ambient_weight; ++v) {
                if (v * slots > remaining)
                    break;
                if (remaining - v > (slots - 1) * spec.max_ambient_weight)
                    continue;
                total += count(remaining - v, v, slots - 1);
            }
            return total;
        };
        if (target >= n)
            out.stats.scanned = count(target, 1, n);
    }

    for (const auto& ambient : compatible_ambients(f, spec)) {
        out.stats.representable += 1;
        Model m;
        try {
            m = pullback_model(f, ambient);
        } catch (const BuildError&) {
            continue;
        }

        InvariantRecord inv;
        try {
            inv = invariant_record(m, spec.n_max_rr);
        } catch (const DimensionMismatch&) {
            continue;
        }
        const Rational& k4 = inv.degree_K4;
        if (k4 <= 0 || boost::multiprecision::denominator(k4) != 1)
            continue;
        out.stats.k4_integral += 1;
        if (!inv.rr_consistent)
            continue;
        out.stats.rr_consistent += 1;

        StrataReport report = smoothness_verdict(m);
        if (report.wellformed)
            out.stats.wellformed += 1;
        if (report.verdict == Verdict::ORBIFOLD) {
            out.stats.orbifold_rejected += 1;
            continue;
        }
        if (!report.wellformed)
            continue;
        if (report.verdict == Verdict::SMOOTH_CANDIDATE)
            out.stats.smooth += 1;
        else
            out.stats.inconclusive += 1;

        CandidateRecord rec;
        rec.format = f;
        rec.ambient = ambient;
        rec.invariants = std::move(inv);
        rec.trail = FilterTrail{true, true, true, report.wellformed, report.verdict};
        rec.report = std::move(report);
        rec.history = m.history;
        out.records.push_back(std::move(rec));
        out.stats.emitted += 1;
    }
    return out;
}

} // namespace

SearchResult run_search(const SearchSpec& spec) {
    const std::vector<FormatData> formats = enumerate_params(spec);
    std::vector<FormatOutcome> outcomes(formats.size());

    const int workers = std::max(1, spec.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < formats.size(); ++i)
            outcomes[i] = process_format(formats[i], spec);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t)
            threads.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < formats.size();
                     i += static_cast<std::size_t>(workers))
                    outcomes[i] = process_format(formats[i], spec);
            });
        for (auto& th : threads)
            th.join();
    }

    SearchResult result;
    for (auto& o : outcomes) {
        result.stats += o.stats;
        std::move(o.records.begin(), o.records.end(), std::back_inserter(result.records));
    }

    auto sort_key = [](const CandidateRecord& r) {
        return std::tuple<int, Int, Rational, std::vector<int>, WeightVector>(
            static_cast<int>(r.format.family), r.invariants.h0[1], r.invariants.degree_K4,
            r.params_key(), r.ambient);
    };
    std::sort(result.records.begin(), result.records.end(),
              [&](const CandidateRecord& a, const CandidateRecord& b) {
                  return sort_key(a) < sort_key(b);
              });
    auto dedup_key = [](const CandidateRecord& r) {
        return std::tuple<int, std::vector<int>, WeightVector>(
            static_cast<int>(r.format.family), r.params_key(), r.ambient);
    };
    result.records.erase(
        std::unique(result.records.begin(), result.records.end(),
                    [&](const CandidateRecord& a, const CandidateRecord& b) {
                        return dedup_key(a) == dedup_key(b);
                    }),
        result.records.end());
    result.stats.emitted = result.records.size();
    return result;
}

} // namespace fano4
