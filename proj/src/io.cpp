#include "flagdod/io.hpp"

#include <sstream>

#include "flagdod/error.hpp"

namespace flagdod {

namespace {

Json subset_json(const RootSubset& s) { return Json(s); }

std::string family_name(Family f) { return f == Family::TypeA ? "A" : "C"; }

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string position_label(const PositionPoset& P, std::size_t index) {
    require(index < P.size(), "position index out of range");
    const auto& rep = P.elements[index].min_rep;
    if (P.spec.family == Family::TypeC && P.theta == full_subset(P.spec) &&
        P.eta == RootSubset{P.spec.rank})
        return sign_label(rep);
    return to_string(rep);
}

Json to_json(const PositionPoset& P) {
    Json j;
    j["family"] = family_name(P.spec.family);
    j["rank"] = P.spec.rank;
    j["theta"] = subset_json(P.theta);
    j["eta"] = subset_json(P.eta);
    Json elems = Json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
        Json e;
        e["index"] = i;
        e["label"] = position_label(P, i);
        e["min_rep"] = to_string(P.elements[i].min_rep);
        e["length"] = length(P.elements[i].min_rep);
        Json members = Json::array();
        for (const auto& m : P.elements[i].members) members.push_back(to_string(m));
        e["members"] = members;
        elems.push_back(e);
    }
    j["elements"] = elems;
    Json covers = Json::array();
    for (auto [a, b] : P.covers()) covers.push_back({position_label(P, a), position_label(P, b)});
    j["covers"] = covers;
    if (P.w0_action) {
        Json w0 = Json::object();
        for (std::size_t i = 0; i < P.size(); ++i)
            w0[position_label(P, i)] = position_label(P, (*P.w0_action)[i]);
        j["w0_action"] = w0;
    }
    return j;
}

std::string to_dot(const PositionPoset& P, const std::string& name) {
    std::ostringstream out;
    out << "graph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < P.size(); ++i)
        out << "  n" << i << " [label=" << quote(position_label(P, i)) << "];\n";
    for (auto [a, b] : P.covers()) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

Json ideals_report(const PositionPoset& P) {
    Json j;
    j["poset"] = {{"family", family_name(P.spec.family)},
                  {"rank", P.spec.rank},
                  {"theta", subset_json(P.theta)},
                  {"eta", subset_json(P.eta)},
                  {"size", P.size()}};
    std::string diagnostic;
    auto ideals = enumerate_balanced_ideals(P, &diagnostic);
    Json list = Json::array();
    for (const auto& I : ideals) {
        Json e;
        Json members = Json::array(), gens = Json::array();
        for (auto m : I.members) members.push_back(position_label(P, m));
        for (auto g : generators(P, I)) gens.push_back(position_label(P, g));
        e["members"] = members;
        e["generators"] = gens;
        if (P.theta == full_subset(P.spec)) e["minimal_anosov_type"] = minimal_anosov_type(P, I);
        list.push_back(e);
    }
    j["balanced_ideals"] = list;
    if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
    return j;
}

GQ entry_from_json(const Json& j) {
    auto text = [](const Json& x) -> std::string {
        if (x.is_number_integer()) return std::to_string(x.get<long long>());
        require(x.is_string(), "matrix entries must be integers or rational strings");
        return x.get<std::string>();
    };
    if (j.is_array()) {
        require(j.size() == 2, "complex entries are [re, im] pairs");
        return GQ::parse(text(j[0]), text(j[1]));
    }
    return GQ::parse(text(j), "0");
}

Json entry_to_json(const GQ& x) { return Json::array({x.re().get_str(), x.im().get_str()}); }

ExactMatrix matrix_from_json(const Json& rows) {
    require(rows.is_array() && !rows.empty(), "matrix must be a nonempty list of rows");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    require(cols > 0, "matrix rows must be nonempty lists");
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].is_array() && rows[r].size() == cols, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(rows[r][c]);
    }
    return m;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ExactFlag flag_from_json(const Json& j) {
    require(j.is_object(), "flag must be a JSON object");
    require(j.contains("ambient") && j["ambient"].is_number_integer(), "flag needs 'ambient'");
    require(j.contains("signature") && j["signature"].is_array(), "flag needs 'signature'");
    Signature sig{j["signature"].get<std::vector<int>>(), j["ambient"].get<int>()};
    // vectors are listed one per entry, so the matrix is the transpose
    if (j.contains("basis")) return ExactFlag(sig, matrix_from_json(j["basis"]).transpose());
    require(j.contains("columns"), "flag needs 'columns' or 'basis'");
    return ExactFlag::from_top_columns(sig, matrix_from_json(j["columns"]).transpose());
}

Json flag_to_json(const ExactFlag& F) {
    return {{"ambient", F.ambient()},
            {"signature", F.signature().dims},
            {"basis", matrix_to_json(F.basis().transpose())}};
}

SymplecticForm form_from_json(const Json& j) {
    require(j.is_object() && j.contains("gram"), "symplectic form needs 'gram'");
    return SymplecticForm(matrix_from_json(j["gram"]));
}

Json to_json(const WeightGraph& g) {
    Json round = Json::array(), square = Json::array(), edges = Json::array();
    for (const auto& v : g.rounds) round.push_back({{"id", v.id}, {"sign", v.sign > 0 ? "+" : "-"}});
    for (const auto& s : g.squares) square.push_back({{"id", s.id}, {"euler", s.euler}});
    for (const auto& e : g.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
    return {{"round", round}, {"square", square}, {"edges", edges}};
}

WeightGraph graph_from_json(const Json& j) {
    require(j.is_object(), "graph must be a JSON object");
    WeightGraph g;
    try {
        for (const auto& v : j.value("round", Json::array())) {
            std::string s = v.at("sign").get<std::string>();
            require(s == "+" || s == "-", "sign must be \"+\" or \"-\"");
            g.rounds.push_back({v.at("id").get<std::string>(), s == "+" ? 1 : -1});
        }
        for (const auto& v : j.value("square", Json::array()))
            g.squares.push_back({v.at("id").get<std::string>(), v.at("euler").get<int>()});
        for (const auto& e : j.value("edges", Json::array()))
            g.edges.push_back(
                {e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.at("weight").get<int>()});
    } catch (const nlohmann::json::exception& ex) {
        throw Error(std::string("malformed graph: ") + ex.what());
    }
    g.validate();
    return g;
}

std::string to_dot(const WeightGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << quote(name) << " {\n";
    for (const auto& v : g.rounds)
        out << "  " << quote(v.id) << " [shape=circle, label=" << quote(v.sign > 0 ? "+" : "-")
            << ", xlabel=" << quote(v.id) << "];\n";
    for (const auto& s : g.squares)
        out << "  " << quote(s.id) << " [shape=box, label=" << quote(std::to_string(s.euler))
            << ", xlabel=" << quote(s.id) << "];\n";
    for (const auto& e : g.edges)
        out << "  " << quote(e.a) << " -- " << quote(e.b) << " [label="
            << quote(std::to_string(e.weight)) << "];\n";
    out << "}\n";
    return out.str();
}

Json to_json(const Classification& c) {
    return {{"matched", c.matched}, {"model", c.model}, {"diffeotype", c.diffeotype}};
}

Json to_json(const CaseResult& r) {
    Json j;
    j["partition"] = r.spec.partition.to_string();
    j["flag"] = to_string(r.spec.flag);
    j["group"] = to_string(r.group);
    Json basis = Json::array();
    for (std::size_t k = 0; k < r.basis.size(); ++k)
        basis.push_back({{"label", r.basis.labels[k]}, {"weight", r.basis.weights[k]}});
    j["basis"] = basis;
    Json points = Json::array();
    for (const auto& p : r.locus.isolated) {
        Json e;
        e["id"] = p.id;
        e["ambient_weights"] = r.ambient_weights.at(p.id);
        e["fiber_weights"] = r.fiber_weights.at(p.id);
        e["sign"] = sign_of_fixed_point(r.ambient_weights.at(p.id)) > 0 ? "+" : "-";
        points.push_back(e);
    }
    j["fixed_points"] = points;
    Json surfaces = Json::array();
    for (const auto& s : r.locus.surfaces)
        surfaces.push_back({{"id", s.id},
                            {"weight", s.weight},
                            {"pencil", {r.basis.labels[s.pencil.first], r.basis.labels[s.pencil.second]}}});
    j["fixed_surfaces"] = surfaces;
    j["ambient_graph"] = to_json(r.ambient);
    j["fiber_graph"] = to_json(r.fiber);
    j["classification"] = to_json(r.classification);
    j["fixed_euler"] = r.fixed_euler;
    j["schubert_cells"] = r.schubert_cells;
    return j;
}

namespace {

std::vector<std::pair<std::string, std::vector<std::string>>> census_groups(
    const std::vector<FlagVarietyDescriptor>& census) {
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    for (const auto& d : census) {
        if (groups.empty() || groups.back().first != d.group_name())
            groups.push_back({d.group_name(), {}});
        groups.back().second.push_back(d.variety_name());
    }
    return groups;
}

}  // namespace

Json census_json(const std::vector<FlagVarietyDescriptor>& census) {
    Json rows = Json::array();
    for (const auto& [group, varieties] : census_groups(census))
        rows.push_back({{"group", group}, {"varieties", varieties}});
    return rows;
}

std::string census_text(const std::vector<FlagVarietyDescriptor>& census) {
    std::ostringstream out;
    for (const auto& [group, varieties] : census_groups(census)) {
        out << group << ":";
        for (std::size_t i = 0; i < varieties.size(); ++i) out << (i ? ", " : " ") << varieties[i];
        out << "\n";
    }
    out << "so5 = sp4 and so6 = sl4, so the SO rows repeat the Sp4 and SL4 varieties\n";
    return out.str();
}

Json fullcases_json(const std::vector<CaseTableRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json parts = Json::array();
        for (const auto& p : r.partitions) parts.push_back(p.to_string());
        out.push_back({{"group", r.group}, {"variety", r.variety}, {"partitions", parts}});
    }
    return out;
}

std::string fullcases_text(const std::vector<CaseTableRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << r.group << " | " << r.variety << " |";
        for (std::size_t i = 0; i < r.partitions.size(); ++i)
            out << (i ? ", " : " ") << r.partitions[i].to_string();
        out << "\n";
    }
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace flagdod
