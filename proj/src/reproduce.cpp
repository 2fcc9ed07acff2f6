#include "flagdod/reproduce.hpp"

#include <sstream>

#include "flagdod/error.hpp"

namespace flagdod {

std::vector<PaperCase> paper_cases() {
    auto p = [](const char* s) { return Partition::parse(s); };
    return {
        {"case1", {p("3"), FlagKind::Full, std::nullopt}},
        {"case2", {p("2,1"), FlagKind::Full, std::nullopt}},
        {"case3", {p("4"), FlagKind::Projective, std::nullopt}},
        {"case4", {p("2,2"), FlagKind::Projective, std::nullopt}},
        {"case5", {p("4"), FlagKind::Lagrangian, std::nullopt}},
        {"case6", {p("2,1,1"), FlagKind::Lagrangian, std::nullopt}},
    };
}

Json theorem_a_summary(const std::vector<PaperCase>& cases, const std::vector<CaseResult>& results) {
    require(cases.size() == results.size(), "theorem_a_summary: size mismatch");
    Json rows = Json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& r = results[i];
        rows.push_back({{"case", cases[i].name},
                        {"partition", r.spec.partition.to_string()},
                        {"flag", to_string(r.spec.flag)},
                        {"group", to_string(r.group)},
                        {"model", r.classification.model},
                        {"diffeotype", r.classification.diffeotype},
                        {"fixed_euler", r.fixed_euler},
                        {"schubert_cells", r.schubert_cells}});
    }
    return rows;
}

std::map<std::string, std::string> paper_artifacts() {
    std::map<std::string, std::string> out;

    RootSystemSpec a2{Family::TypeA, 2}, a3{Family::TypeA, 3}, c2{Family::TypeC, 2};
    auto s3 = double_cosets(a2, full_subset(a2), full_subset(a2));
    auto sp4 = double_cosets(c2, full_subset(c2), {2});
    auto cp3 = double_cosets(a3, full_subset(a3), {1});
    out["hasse_s3.dot"] = to_dot(s3, "hasse_s3");
    out["hasse_s3.json"] = dump(to_json(s3));
    out["hasse_sp4.dot"] = to_dot(sp4, "hasse_sp4");
    out["hasse_sp4.json"] = dump(to_json(sp4));
    out["ideals_s3.json"] = dump(ideals_report(s3));
    out["ideals_sl4_cp3.json"] = dump(ideals_report(cp3));
    out["ideals_sp4_lag.json"] = dump(ideals_report(sp4));

    const auto cases = paper_cases();
    std::vector<CaseResult> results;
    for (const auto& c : cases) {
        results.push_back(compute_case(c.spec));
        out[c.name + ".json"] = dump(to_json(results.back()));
        out[c.name + ".dot"] = to_dot(results.back().fiber, c.name);
    }
    out["theorem_a.json"] = dump(theorem_a_summary(cases, results));

    auto census = enumerate_3dim_flag_varieties(8);
    out["census.json"] = dump(census_json(census));
    out["census.txt"] = census_text(census);
    auto table = fullcases_table();
    out["fullcases.json"] = dump(fullcases_json(table));
    out["fullcases.txt"] = fullcases_text(table);
    return out;
}

namespace {

std::string pointer_append(const std::string& base, const std::string& key) {
    return base + "/" + key;
}

std::optional<std::string> json_divergence(const Json& e, const Json& a, const std::string& where) {
    auto here = where.empty() ? std::string("/") : where;
    if (e.type() != a.type()) return here + ": type differs";
    if (e.is_object()) {
        for (auto it = e.begin(); it != e.end(); ++it) {
            if (!a.contains(it.key())) return pointer_append(where, it.key()) + ": missing";
            if (auto d = json_divergence(it.value(), a[it.key()], pointer_append(where, it.key())))
                return d;
        }
        for (auto it = a.begin(); it != a.end(); ++it)
            if (!e.contains(it.key())) return pointer_append(where, it.key()) + ": unexpected";
        return std::nullopt;
    }
    if (e.is_array()) {
        for (std::size_t i = 0; i < e.size() && i < a.size(); ++i)
            if (auto d = json_divergence(e[i], a[i], pointer_append(where, std::to_string(i))))
                return d;
        if (e.size() != a.size())
            return here + ": expected " + std::to_string(e.size()) + " entries, got " +
                   std::to_string(a.size());
        return std::nullopt;
    }
    if (e != a) return here + ": expected " + e.dump() + ", got " + a.dump();
    return std::nullopt;
}

}  // namespace

std::optional<std::string> first_divergence(const std::string& file, const std::string& expected,
                                            const std::string& actual) {
    if (expected == actual) return std::nullopt;
    if (file.size() > 5 && file.substr(file.size() - 5) == ".json") {
        Json e = Json::parse(expected, nullptr, false), a = Json::parse(actual, nullptr, false);
        if (!e.is_discarded() && !a.is_discarded()) {
            if (auto d = json_divergence(e, a, "")) return d;
            return std::string("formatting differs");
        }
    }
    std::istringstream es(expected), as(actual);
    std::string el, al;
    for (int line = 1;; ++line) {
        bool he = static_cast<bool>(std::getline(es, el));
        bool ha = static_cast<bool>(std::getline(as, al));
        if (!he && !ha) return std::string("trailing newline differs");
        if (he != ha || el != al)
            return "line " + std::to_string(line) + ": expected '" + (he ? el : "<eof>") +
                   "', got '" + (ha ? al : "<eof>") + "'";
    }
}

}  // namespace flagdod
