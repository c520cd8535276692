#include "fano4/known_data.hpp"

#include <nlohmann/json.hpp>

#include "fano4/embedded_data.hpp"

namespace fano4 {

namespace {

Family family_from(const std::string& s) {
    if (s == "ci")
        return Family::CI;
    if (s == "gr25")
        return Family::GR25;
    if (s == "gr25h")
        return Family::GR25_H;
    if (s == "p2xp2")
        return Family::P2XP2;
    throw std::invalid_argument("unknown family: " + s);
}

std::vector<KnownModel> parse_rows(const char* text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<KnownModel> rows;
    for (const auto& r : doc.at("rows")) {
        KnownModel k;
        k.no = r.at("no").get<int>();
        k.label = r.at("label").get<std::string>();
        if (r.contains("note"))
            k.note = r.at("note").get<std::string>();
        k.family = family_from(r.at("family").get<std::string>());
        if (r.contains("a2"))
            k.doubled_a = r.at("a2").get<std::vector<int>>();
        if (r.contains("b2"))
            k.doubled_b = r.at("b2").get<std::vector<int>>();
        if (r.contains("c2"))
            k.doubled_c = r.at("c2").get<std::vector<int>>();
        if (r.contains("degrees"))
            k.ci_degrees = r.at("degrees").get<std::vector<int>>();
        if (r.contains("h"))
            k.hypersurface = r.at("h").get<int>();
        k.ambient = r.at("ambient").get<WeightVector>();
        k.expected_h0 = r.at("h0").get<int>();
        k.expected_K4 = r.at("K4").get<int>();
        rows.push_back(std::move(k));
    }
    return rows;
}

} // namespace

const std::vector<KnownModel>& table1() {
    static const std::vector<KnownModel> rows = parse_rows(embedded::table1_json);
    return rows;
}

const std::vector<KnownModel>& table2() {
    static const std::vector<KnownModel> rows = parse_rows(embedded::table2_json);
    return rows;
}

const std::vector<KnownFamilyPoint>& figure_points() {
    static const std::vector<KnownFamilyPoint> points = [] {
        const nlohmann::json doc = nlohmann::json::parse(embedded::figure1_json);
        std::vector<KnownFamilyPoint> out;
        auto take = [&](const char* key, const char* source) {
            for (const auto& p : doc.at(key))
                out.push_back(KnownFamilyPoint{p.at(0).get<int>(), p.at(1).get<int>(), source});
        };
        take("this_paper", "THIS_PAPER");
        take("prior_work", "PRIOR_WORK");
        take("both", "BOTH");
        return out;
    }();
    return points;
}

FormatData known_format(const KnownModel& k) {
    switch (k.family) {
    case Family::CI:
        return ci_format(k.ci_degrees);
    case Family::GR25:
        return gr25_format(PfaffianParams{HalfIntVector{k.doubled_a}});
    case Family::GR25_H:
        return with_hypersurface(gr25_format(PfaffianParams{HalfIntVector{k.doubled_a}}),
                                 k.hypersurface);
    case Family::P2XP2:
        return p2xp2_format(SegreParams{HalfIntVector{k.doubled_b}, HalfIntVector{k.doubled_c}});
    }
    throw std::logic_error("unreachable");
}

Model build_known(const KnownModel& k) {
    return pullback_model(known_format(k), k.ambient);
}

} // namespace fano4
