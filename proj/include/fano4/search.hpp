#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "fano4/invariants.hpp"
#include "fano4/strata.hpp"

namespace fano4 {

struct SearchSpec {
    std::vector<Family> families{Family::CI, Family::GR25, Family::GR25_H, Family::P2XP2};
    int max_doubled_param = 9;
    int max_ambient_weight = 8;
    int max_equation_degree = 16;
    int max_hypersurface_degree = 8;
    int ci_max_codim = 4;
    int n_max_rr = 10;
    int workers = 1;
};

struct FilterTrail {
    bool index_one = false;
    bool k4_positive_integer = false;
    bool rr_consistent = false;
    bool wellformed = false;
    Verdict verdict = Verdict::INCONCLUSIVE;
};

struct CandidateRecord {
    FormatData format;
    WeightVector ambient;
    InvariantRecord invariants;
    StrataReport report;
    std::vector<BuildStep> history;
    FilterTrail trail;

    std::vector<int> params_key() const;
    nlohmann::json to_json() const;
};

struct SearchStats {
    std::uint64_t formats = 0;
    std::uint64_t scanned = 0;          // (format, ambient) pairs considered
    std::uint64_t representable = 0;    // pairs where all degrees exist as forms
    std::uint64_t k4_integral = 0;      // positive integral anticanonical degree
    std::uint64_t rr_consistent = 0;
    std::uint64_t wellformed = 0;
    std::uint64_t orbifold_rejected = 0;
    std::uint64_t smooth = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t emitted = 0;

    SearchStats& operator+=(const SearchStats& o);
    nlohmann::json to_json() const;
};

struct SearchResult {
    std::vector<CandidateRecord> records;
    SearchStats stats;
};

/* All canonicalized parameter tuples of the supported families within bounds. */
std::vector<FormatData> enumerate_params(const SearchSpec& spec);

/* Ambient multisets of size 5 + codim with sum socle_k + 1 (index 1),
 * entries bounded, and every entry/equation degree representable. */
std::vector<WeightVector> compatible_ambients(const FormatData& f, const SearchSpec& spec);

/* Full pipeline; deterministic output regardless of worker count. */
SearchResult run_search(const SearchSpec& spec);

} // namespace fano4
