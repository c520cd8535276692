// Command-line surface: single-model Hilbert series and analysis, reference
// table reproduction, candidate search, and the geography dataset.
//
// Exit codes: 0 success, 2 invalid input, 3 reproduction mismatch, 4 I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fano4/invariants.hpp"
#include "fano4/known_data.hpp"
#include "fano4/search.hpp"
#include "fano4/strata.hpp"

using namespace fano4;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitIo = 4;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Half-integer list: "1/2,1/2,3/2", doubled form "d1,d1,d3", or plain
 * integers; stored doubled. */
std::vector<int> parse_half_ints(const std::string& text) {
    std::vector<int> doubled;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            if (!item.empty() && item.front() == 'd') {
                doubled.push_back(std::stoi(item.substr(1)));
            } else if (auto slash = item.find('/'); slash != std::string::npos) {
                const int num = std::stoi(item.substr(0, slash));
                const int den = std::stoi(item.substr(slash + 1));
                if (den != 2)
                    throw InvalidInput("half-integer denominators must be 2: " + item);
                doubled.push_back(num);
            } else {
                doubled.push_back(2 * std::stoi(item));
            }
        } catch (const InvalidInput&) {
            throw;
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse half-integer '" + item + "'");
        }
    }
    if (doubled.empty())
        throw InvalidInput("empty parameter list");
    return doubled;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse integer '" + item + "'");
        }
    }
    if (out.empty())
        throw InvalidInput("empty integer list");
    return out;
}

struct ModelFlags {
    std::string format;
    std::string a, b, c, degrees, ambient;
    int hyp = 0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
    cmd->add_option("--format", mf.format, "ci | gr25 | gr25h | p2xp2")->required();
    cmd->add_option("--a", mf.a, "Pfaffian parameters (e.g. 1/2,1/2,1/2,3/2,3/2 or d1,...)");
    cmd->add_option("--b", mf.b, "Segre row parameters");
    cmd->add_option("--c", mf.c, "Segre column parameters");
    cmd->add_option("--degrees", mf.degrees, "complete-intersection degrees");
    cmd->add_option("--hyp", mf.hyp, "hypersurface degree for gr25h");
    cmd->add_option("--ambient", mf.ambient, "ambient weights, e.g. 1,1,1,1,1,1,2,2")
        ->required();
}

Model build_from_flags(const ModelFlags& mf) {
    FormatData f;
    if (mf.format == "ci") {
        if (mf.degrees.empty())
            throw InvalidInput("--format ci needs --degrees");
        f = ci_format(parse_ints(mf.degrees));
    } else if (mf.format == "gr25" || mf.format == "gr25h") {
        if (mf.a.empty())
            throw InvalidInput("--format " + mf.format + " needs --a");
        f = gr25_format(PfaffianParams{HalfIntVector{parse_half_ints(mf.a)}});
        if (mf.format == "gr25h") {
            if (mf.hyp < 2)
                throw InvalidInput("--format gr25h needs --hyp >= 2");
            f = with_hypersurface(f, mf.hyp);
        }
    } else if (mf.format == "p2xp2") {
        if (mf.b.empty() || mf.c.empty())
            throw InvalidInput("--format p2xp2 needs --b and --c");
        f = p2xp2_format(SegreParams{HalfIntVector{parse_half_ints(mf.b)},
                                     HalfIntVector{parse_half_ints(mf.c)}});
    } else {
        throw InvalidInput("unknown format '" + mf.format + "'");
    }
    return pullback_model(f, parse_ints(mf.ambient));
}

int cmd_hilbert(const ModelFlags& mf, int order) {
    const Model m = build_from_flags(mf);
    const auto s = series_expand(m.format.numerator, m.ambient, order);
    std::cout << "numerator: " << m.format.numerator.str() << "\n";
    std::cout << "socle degree: " << m.format.socle_k << "\n";
    std::cout << "canonical coefficient: " << m.canonical_coeff() << "\n";
    std::cout << "coefficients:";
    for (const auto& c : s.coeffs)
        std::cout << " " << c;
    std::cout << "\n";
    return 0;
}

int cmd_analyze(const ModelFlags& mf, int n_max) {
    const Model m = build_from_flags(mf);
    std::cout << "dim: " << m.dim() << "\n";
    std::cout << "canonical coefficient: " << m.canonical_coeff() << "\n";
    if (m.dim() == 4 && m.canonical_coeff() == -1) {
        const auto inv = invariant_record(m, n_max);
        std::cout << "K4: " << inv.degree_K4 << "\n";
        std::cout << "c2K2: " << inv.c2K2 << "\n";
        std::cout << "h0:";
        for (const auto& c : inv.h0.coeffs)
            std::cout << " " << c;
        std::cout << "\n";
        std::cout << "rr_consistent: " << (inv.rr_consistent ? "yes" : "no") << "\n";
        std::cout << "small_invariants: " << (inv.small ? "yes" : "no") << "\n";
    }
    const auto report = smoothness_verdict(m);
    std::cout << "wellformed: " << (report.wellformed ? "yes" : "no") << "\n";
    for (const auto& est : report.strata) {
        std::cout << "stratum (";
        const auto sw = stratum_weights(m.ambient, est.stratum);
        for (std::size_t i = 0; i < sw.size(); ++i)
            std::cout << (i ? "," : "") << sw[i];
        std::cout << "): ";
        if (est.empty())
            std::cout << "EMPTY";
        else
            std::cout << "dim " << *est.dim;
        std::cout << " (" << est.surviving << " surviving, "
                  << (est.exactness == Exactness::EXACT ? "exact" : "heuristic") << ")\n";
    }
    for (const auto& p : report.orbifold)
        std::cout << "orbifold point: " << p.str() << "\n";
    for (const auto& n : report.base_locus_notes)
        std::cout << n << "\n";
    std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
    return 0;
}

int cmd_tables(int which) {
    const auto& rows = which == 1 ? table1() : table2();
    int mismatches = 0;
    for (const auto& k : rows) {
        const Model m = build_known(k);
        const auto inv = invariant_record(m);
        const bool ok = inv.h0[1] == k.expected_h0 &&
                        inv.degree_K4 == Rational(k.expected_K4) && inv.rr_consistent;
        std::cout << "#" << k.no << " " << k.label << ": h0=" << inv.h0[1]
                  << " K4=" << inv.degree_K4 << (ok ? "" : "  << MISMATCH") << "\n";
        if (!k.note.empty())
            std::cout << "   note: " << k.note << "\n";
        if (!ok)
            ++mismatches;
    }
    if (mismatches) {
        std::cerr << mismatches << " row(s) mismatch\n";
        return kExitMismatch;
    }
    std::cout << rows.size() << " rows, all matching\n";
    return 0;
}

int cmd_search(const SearchSpec& spec, const std::string& out_path) {
    const auto res = run_search(spec);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
        out = &file;
    }
    for (const auto& r : res.records)
        *out << r.to_json().dump() << "\n";
    if (out == &file && !file) {
        std::cerr << "write failure on " << out_path << "\n";
        return kExitIo;
    }
    std::cerr << "stats: " << res.stats.to_json().dump() << "\n";
    return 0;
}

int cmd_geography(bool include_known, const std::string& records_path, bool filter_small,
                  const std::string& out_path) {
    std::vector<KnownFamilyPoint> points;
    if (include_known)
        points = figure_points();
    if (!records_path.empty()) {
        std::ifstream in(records_path);
        if (!in) {
            std::cerr << "cannot read " << records_path << "\n";
            return kExitIo;
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::parse_error& e) {
                std::cerr << "bad record line: " << e.what() << "\n";
                return kExitInvalid;
            }
            points.push_back(KnownFamilyPoint{j.at("K4").get<int>(),
                                              j.at("h0").at(1).get<int>(), "SEARCH"});
        }
    }
    if (filter_small) {
        std::erase_if(points, [](const KnownFamilyPoint& p) {
            return !(p.K4 >= 1 && p.K4 <= 17 && p.h0 >= 3 && p.h0 <= 9);
        });
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
        out = &file;
    }
    *out << "K4,h0,source\n";
    for (const auto& p : points)
        *out << p.K4 << "," << p.h0 << "," << p.source << "\n";
    if (out == &file && !file)
        return kExitIo;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic constructor and search for Fano 4-fold candidates "
                 "in Gorenstein formats"};
    app.require_subcommand(1);

    ModelFlags hilbert_flags;
    int hilbert_order = 10;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients of a model");
    add_model_flags(hilbert, hilbert_flags);
    hilbert->add_option("--order", hilbert_order, "truncation order");

    ModelFlags analyze_flags;
    int analyze_nmax = 10;
    auto* analyze = app.add_subcommand("analyze", "full invariant and strata report");
    add_model_flags(analyze, analyze_flags);
    analyze->add_option("--n-max", analyze_nmax, "Riemann-Roch consistency depth");

    int which = 1;
    auto* tables = app.add_subcommand("tables", "recompute the bundled reference tables");
    tables->add_option("--which", which, "1 or 2")->check(CLI::IsMember({1, 2}));

    SearchSpec spec;
    std::string families_flag = "ci,gr25,gr25h,p2xp2";
    std::string search_out;
    auto* search = app.add_subcommand("search", "enumerate and filter candidates");
    search->add_option("--families", families_flag, "comma list of ci,gr25,gr25h,p2xp2");
    search->add_option("--max-doubled-param", spec.max_doubled_param);
    search->add_option("--max-ambient-weight", spec.max_ambient_weight);
    search->add_option("--max-equation-degree", spec.max_equation_degree);
    search->add_option("--max-hypersurface-degree", spec.max_hypersurface_degree);
    search->add_option("--ci-max-codim", spec.ci_max_codim);
    search->add_option("--n-max-rr", spec.n_max_rr);
    search->add_option("--workers", spec.workers);
    search->add_option("--out", search_out, "output path for JSON lines ('-' = stdout)");

    bool include_known = false, filter_small = false;
    std::string records_path, geo_out;
    auto* geography = app.add_subcommand("geography", "emit the (K4, h0) dataset as CSV");
    geography->add_flag("--include-known", include_known, "merge the bundled dataset");
    geography->add_option("--records", records_path, "JSON-lines search output to merge");
    geography->add_flag("--filter", filter_small,
                        "keep only the small-invariants window")
        ->option_text("small");
    geography->add_option("--out", geo_out, "output CSV path ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hilbert->parsed())
            return cmd_hilbert(hilbert_flags, hilbert_order);
        if (analyze->parsed())
            return cmd_analyze(analyze_flags, analyze_nmax);
        if (tables->parsed())
            return cmd_tables(which);
        if (search->parsed()) {
            spec.families.clear();
            std::stringstream ss(families_flag);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "ci")
                    spec.families.push_back(Family::CI);
                else if (item == "gr25")
                    spec.families.push_back(Family::GR25);
                else if (item == "gr25h")
                    spec.families.push_back(Family::GR25_H);
                else if (item == "p2xp2")
                    spec.families.push_back(Family::P2XP2);
                else
                    throw InvalidInput("unknown family '" + item + "'");
            }
            return cmd_search(spec, search_out);
        }
        if (geography->parsed())
            return cmd_geography(include_known, records_path, filter_small, geo_out);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const FormatError& e) {
        std::cerr << "invalid format parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const BuildError& e) {
        std::cerr << "invalid model: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
