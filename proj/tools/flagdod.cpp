#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flagdod/error.hpp"
#include "flagdod/io.hpp"
#include "flagdod/reproduce.hpp"

#ifndef FLAGDOD_GOLDEN_DIR
#define FLAGDOD_GOLDEN_DIR "paper"
#endif

using namespace flagdod;
namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 1;
constexpr int kComputation = 2;
constexpr int kMismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    Json j = Json::parse(read_file(path), nullptr, false);
    require(!j.is_discarded(), path + " is not valid JSON");
    return j;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), "cannot write " + path.string());
    out << text;
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::TypeA;
    if (s == "C" || s == "c") return Family::TypeC;
    throw UsageError("family must be A or C");
}

struct PosetArgs {
    std::string family = "A";
    int rank = 2;
    std::vector<int> theta, eta;
};

void add_poset_options(CLI::App* sub, PosetArgs& a) {
    sub->add_option("--family", a.family, "A or C")->capture_default_str();
    sub->add_option("--rank", a.rank, "rank of the root system")->capture_default_str();
    sub->add_option("--theta", a.theta, "left type, e.g. 1,2 (default: all roots)")->delimiter(',');
    sub->add_option("--eta", a.eta, "right type (default: all roots)")->delimiter(',');
}

PositionPoset build_poset(const PosetArgs& a) {
    RootSystemSpec spec{parse_family(a.family), a.rank};
    spec.validate();
    RootSubset theta = a.theta.empty() ? full_subset(spec) : RootSubset(a.theta.begin(), a.theta.end());
    RootSubset eta = a.eta.empty() ? full_subset(spec) : RootSubset(a.eta.begin(), a.eta.end());
    return double_cosets(spec, theta, eta);
}

// Type of a flag with the given signature: type A on C^n, or type C with
// isotropic dimensions when a form is present.
RootSystemSpec spec_for(const ExactFlag& F, bool symplectic) {
    if (symplectic) return {Family::TypeC, F.ambient() / 2};
    return {Family::TypeA, F.ambient() - 1};
}

int run_position(const std::string& f_path, const std::string& h_path, const std::string& w_path,
                 bool as_json) {
    ExactFlag F = flag_from_json(read_json(f_path));
    ExactFlag H = flag_from_json(read_json(h_path));
    std::optional<SymplecticForm> omega;
    if (!w_path.empty()) omega = form_from_json(read_json(w_path));
    require(F.ambient() == H.ambient(), "flags live in different spaces");
    RootSystemSpec spec = spec_for(F, omega.has_value());
    spec.validate();
    RootSubset theta(F.signature().dims.begin(), F.signature().dims.end());
    RootSubset eta(H.signature().dims.begin(), H.signature().dims.end());

    WeylElement w = omega ? relative_position_symplectic(lift_to_full(F, omega), lift_to_full(H, omega), *omega)
                          : relative_position_full(lift_to_full(F, omega), lift_to_full(H, omega));
    DoubleCoset c = relative_position_partial(spec, F, theta, H, eta, omega);
    if (as_json) {
        Json j{{"permutation", to_string(w)},
               {"identity", w.is_identity()},
               {"double_coset", to_string(c.min_rep)},
               {"theta", theta},
               {"eta", eta}};
        std::cout << dump(j);
    } else {
        std::cout << (w.is_identity() ? std::string("identity") : to_string(w)) << "\n";
        std::cout << "double coset: " << to_string(c.min_rep) << "\n";
    }
    return 0;
}

int run_reps(const std::string& text) {
    Partition p = Partition::parse(text);
    Json j;
    j["partition"] = p.to_string();
    j["weights"] = partition_weights(p);
    j["anosov_type"] = anosov_type(p);
    bool even = p.total() % 2 == 0;
    bool symplectic = even && admits_symplectic_form(p);
    j["admits_symplectic_form"] = symplectic;
    WeightedBasis b = so2_weight_basis(p);
    Json basis = Json::array();
    for (std::size_t k = 0; k < b.size(); ++k) basis.push_back({{"label", b.labels[k]}, {"weight", b.weights[k]}});
    j["basis"] = basis;
    if (symplectic) {
        j["anosov_type_symplectic"] = anosov_type_symplectic(p);
        j["symplectic_form"] = {{"gram", matrix_to_json(weight_pairing_form(b, p).gram)}};
    }
    std::cout << dump(j);
    return 0;
}

FlagKind parse_flag(const std::string& s) {
    if (s == "full") return FlagKind::Full;
    if (s == "proj") return FlagKind::Projective;
    if (s == "lag") return FlagKind::Lagrangian;
    throw UsageError("--flag must be full, proj or lag");
}

std::optional<CircleGroup> parse_group(const std::string& s) {
    if (s == "so2") return CircleGroup::SO2;
    if (s == "pso2") return CircleGroup::PSO2;
    if (s == "auto") return std::nullopt;
    throw UsageError("--group must be so2, pso2 or auto");
}

int run_reproduce(const std::string& golden_dir, bool update) {
    auto artifacts = paper_artifacts();
    if (const char* dir = std::getenv("FLAGDOD_OUTPUT_DIR"); dir && *dir) {
        fs::create_directories(dir);
        for (const auto& [name, text] : artifacts) write_file(fs::path(dir) / name, text);
    }
    if (update) {
        fs::create_directories(golden_dir);
        for (const auto& [name, text] : artifacts) write_file(fs::path(golden_dir) / name, text);
        std::cout << "updated " << artifacts.size() << " golden files in " << golden_dir << "\n";
        return 0;
    }
    int bad = 0;
    for (const auto& [name, text] : artifacts) {
        fs::path path = fs::path(golden_dir) / name;
        if (!fs::exists(path)) {
            std::cout << "MISMATCH " << name << ": golden file missing\n";
            ++bad;
            continue;
        }
        if (auto d = first_divergence(name, read_file(path.string()), text)) {
            std::cout << "MISMATCH " << name << ": " << *d << "\n";
            ++bad;
        } else {
            std::cout << "ok " << name << "\n";
        }
    }
    if (bad) {
        std::cout << bad << " of " << artifacts.size() << " golden files differ\n";
        return kMismatch;
    }
    std::cout << "all " << artifacts.size() << " golden files match\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag-manifold domains of discontinuity: posets, ideals, positions, weight graphs"};
    app.require_subcommand(1);

    PosetArgs hasse_args;
    std::string hasse_format = "dot";
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a position poset");
    add_poset_options(hasse, hasse_args);
    hasse->add_option("--format", hasse_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

    PosetArgs ideal_args;
    auto* ideals = app.add_subcommand("ideals", "balanced ideals with minimal Anosov types (JSON)");
    add_poset_options(ideals, ideal_args);

    std::string f_path, h_path, w_path;
    bool position_json = false;
    auto* position = app.add_subcommand("position", "relative position of two flags");
    position->add_option("F", f_path, "first flag (JSON)")->required();
    position->add_option("H", h_path, "second flag (JSON)")->required();
    position->add_option("--symplectic", w_path, "symplectic form (JSON), selects type C");
    position->add_flag("--json", position_json, "print JSON");

    std::string reps_partition;
    auto* reps = app.add_subcommand("reps", "weights and Anosov type of a partition (JSON)");
    reps->add_option("--partition", reps_partition, "e.g. 3,2,1")->required();

    std::string twg_partition, twg_flag = "full", twg_group = "auto", twg_format = "json", twg_graph = "fiber";
    auto* twg = app.add_subcommand("twg", "tangential weight graph of a case");
    twg->add_option("--partition", twg_partition, "e.g. 2,1,1")->required();
    twg->add_option("--flag", twg_flag, "full, proj or lag")->capture_default_str();
    twg->add_option("--group", twg_group, "so2, pso2 or auto")->capture_default_str();
    twg->add_option("--format", twg_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    twg->add_option("--graph", twg_graph, "fiber or ambient (dot only)")->check(CLI::IsMember({"fiber", "ambient"}));

    std::string graph_path;
    auto* classify = app.add_subcommand("classify", "match a weight graph against the Hirzebruch models");
    classify->add_option("graph", graph_path, "graph (JSON)")->required();

    std::string census_format = "text";
    auto* census = app.add_subcommand("census", "3-dimensional flag varieties and the case table");
    census->add_option("--format", census_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string golden_dir = FLAGDOD_GOLDEN_DIR;
    bool update = false;
    auto* reproduce = app.add_subcommand("reproduce", "regenerate every figure and table, diff against goldens");
    reproduce->add_option("--golden-dir", golden_dir, "directory of golden files")->capture_default_str();
    reproduce->add_flag("--update", update, "overwrite the golden files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*hasse) {
            auto P = build_poset(hasse_args);
            std::cout << (hasse_format == "dot" ? to_dot(P) : dump(to_json(P)));
        } else if (*ideals) {
            std::cout << dump(ideals_report(build_poset(ideal_args)));
        } else if (*position) {
            return run_position(f_path, h_path, w_path, position_json);
        } else if (*reps) {
            return run_reps(reps_partition);
        } else if (*twg) {
            CaseSpec spec{Partition::parse(twg_partition), parse_flag(twg_flag), parse_group(twg_group)};
            auto r = compute_case(spec);
            if (twg_format == "dot")
                std::cout << to_dot(twg_graph == "fiber" ? r.fiber : r.ambient);
            else
                std::cout << dump(to_json(r));
        } else if (*classify) {
            std::cout << dump(to_json(classify_fiber(graph_from_json(read_json(graph_path)))));
        } else if (*census) {
            auto rows = enumerate_3dim_flag_varieties(8);
            auto table = fullcases_table();
            if (census_format == "json")
                std::cout << dump(Json{{"census", census_json(rows)}, {"fullcases", fullcases_json(table)}});
            else
                std::cout << census_text(rows) << "\n" << fullcases_text(table);
        } else if (*reproduce) {
            return run_reproduce(golden_dir, update);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
    return 0;
}
