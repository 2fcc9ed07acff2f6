#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdod/error.hpp"
#include "flagdod/twg.hpp"
#include "oracles.hpp"

using namespace flagdod;

namespace {

CaseResult run(const char* partition, FlagKind flag, std::optional<CircleGroup> g = std::nullopt) {
    return compute_case({Partition::parse(partition), flag, g});
}

WeightGraph graph(std::vector<RoundVertex> r, std::vector<Edge> e, std::vector<SquareVertex> s = {}) {
    WeightGraph g{std::move(r), std::move(s), std::move(e)};
    g.validate();
    return g;
}

std::set<std::tuple<std::string, std::string, int>> edge_set(const WeightGraph& g) {
    std::set<std::tuple<std::string, std::string, int>> out;
    for (const auto& e : g.edges) out.insert({std::min(e.a, e.b), std::max(e.a, e.b), e.weight});
    return out;
}

WeightGraph random_graph(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(1, 6), coin(0, 1), weight(2, 4), sq(0, 2), eu(-3, 3);
    WeightGraph g;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) g.rounds.push_back({"v" + std::to_string(i), coin(rng) ? 1 : -1});
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (degree[i] < 2 && degree[j] < 2 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
                g.edges.push_back({g.rounds[i].id, g.rounds[j].id, weight(rng)});
                ++degree[i];
                ++degree[j];
            }
    for (int k = sq(rng); k > 0; --k) g.squares.push_back({"s" + std::to_string(k), eu(rng)});
    return g;
}

WeightGraph relabel(const WeightGraph& g, std::mt19937& rng) {
    std::vector<std::size_t> p(g.rounds.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    std::map<std::string, std::string> name;
    WeightGraph h;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& v = g.rounds[p[i]];
        name[v.id] = "w" + std::to_string(i);
        h.rounds.push_back({name[v.id], v.sign});
    }
    for (const auto& e : g.edges) h.edges.push_back({name[e.b], name[e.a], e.weight});
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    h.squares = g.squares;
    std::reverse(h.squares.begin(), h.squares.end());
    return h;
}

}  // namespace

TEST_CASE("case 1: three weight-2 edges with alternating signs") {
    auto r = run("3", FlagKind::Full);
    CHECK(r.group == CircleGroup::PSO2);
    auto expected = graph({{"a", 1}, {"b", -1}, {"c", 1}, {"d", -1}, {"e", 1}, {"f", -1}},
                          {{"a", "b", 2}, {"c", "d", 2}, {"e", "f", 2}});
    CHECK(graphs_isomorphic(r.fiber, expected));
    CHECK(oracle::isomorphic_bruteforce(r.fiber, expected));
    CHECK(r.classification.diffeotype == "(S²×S²)#(S²×S²)");
    CHECK(r.classification.model == "Hir(0;1,2)#Hir(0;1,2)");
}

TEST_CASE("case 2: six edgeless signed vertices") {
    auto r = run("2,1", FlagKind::Full);
    CHECK(r.group == CircleGroup::SO2);
    auto expected = graph({{"a", 1}, {"b", -1}, {"c", 1}, {"d", -1}, {"e", 1}, {"f", -1}}, {});
    CHECK(oracle::isomorphic_bruteforce(r.fiber, expected));
    CHECK(r.ambient.edges.size() == 3);  // the weight-2 spheres are removed in the fiber
    CHECK(r.classification.diffeotype == "(S²×S²)#(S²×S²)");
    CHECK(r.classification.model == "Hir(0;1,1)#Hir(0;1,1)");
}

TEST_CASE("case 3: chain f1 - f-3 - f3 - f-1") {
    auto r = run("4", FlagKind::Projective);
    auto expected = graph({{"f1", 1}, {"f-3", 1}, {"f3", -1}, {"f-1", -1}},
                          {{"f1", "f-3", 2}, {"f-3", "f3", 3}, {"f3", "f-1", 2}});
    CHECK(edge_set(r.fiber) == edge_set(expected));
    for (const auto& v : expected.rounds) CHECK(r.fiber.find_round(v.id)->sign == v.sign);
    CHECK(oracle::isomorphic_bruteforce(r.fiber, expected));
    CHECK(r.classification.model == "Hir(2;-1,2)");
    CHECK(r.classification.diffeotype == "S²×S²");
}

TEST_CASE("case 4: squares 2 and -2") {
    auto r = run("2,2", FlagKind::Projective);
    CHECK(r.fiber.rounds.empty());
    CHECK(r.locus.surfaces.size() == 2);
    CHECK(graphs_isomorphic(r.fiber, graph({}, {}, {{"x", 2}, {"y", -2}})));
    CHECK(r.classification.model == "Hir(2;1,0)");
    CHECK(r.classification.diffeotype == "S²×S²");
}

TEST_CASE("case 5: Lagrangian chain with weights 3, 2, 3") {
    auto r = run("4", FlagKind::Lagrangian);
    auto expected = graph({{"f1,f-3", -1}, {"f3,f1", -1}, {"f-1,f-3", 1}, {"f3,f-1", 1}},
                          {{"f1,f-3", "f3,f1", 3}, {"f3,f1", "f-1,f-3", 2}, {"f-1,f-3", "f3,f-1", 3}});
    CHECK(edge_set(r.fiber) == edge_set(expected));
    for (const auto& v : expected.rounds) CHECK(r.fiber.find_round(v.id)->sign == v.sign);
    CHECK(r.classification.model == "Hir(1;-1,3)");
    CHECK(r.classification.diffeotype == "ℂP²#ℂP̄²");
}

TEST_CASE("case 6: squares 1 and -1") {
    auto r = run("2,1,1", FlagKind::Lagrangian, CircleGroup::SO2);
    CHECK(graphs_isomorphic(r.fiber, graph({}, {}, {{"x", 1}, {"y", -1}})));
    CHECK(r.classification.model == "Hir(1;1,0)");
    CHECK(r.classification.diffeotype == "ℂP²#ℂP̄²");
}

TEST_CASE("fixed-point Euler count equals the number of Schubert cells") {
    struct C { const char* p; FlagKind f; int cells; };
    for (auto c : {C{"3", FlagKind::Full, 6}, C{"2,1", FlagKind::Full, 6}, C{"4", FlagKind::Projective, 4},
                   C{"2,2", FlagKind::Projective, 4}, C{"4", FlagKind::Lagrangian, 4},
                   C{"2,1,1", FlagKind::Lagrangian, 4}}) {
        auto r = run(c.p, c.f);
        CHECK(r.schubert_cells == c.cells);
        CHECK(r.fixed_euler == c.cells);
    }
}

TEST_CASE("ambient tangent weights are the difference-matrix entries") {
    auto r = run("4", FlagKind::Projective);
    for (const auto& [id, w] : r.ambient_weights) {
        CHECK(w.size() == 3);
        for (int x : w) CHECK(x != 0);
    }
    auto basis = so2_weight_basis(Partition::of({4}));
    auto d = difference_matrix(basis, {0, 1, 2, 3}, Signature{{1}, 4}, CircleGroup::PSO2);
    CHECK(d.values() == std::vector<int>{-1, -2, -3});
    CHECK(chart_index_set(Signature{{1, 2}, 3}).size() == 3);
    CHECK(chart_index_set(Signature{{2}, 4}).size() == 4);
}

TEST_CASE("fiber weights drop one hyperbolic weight and keep the sign") {
    for (auto [w, g] : std::vector<std::pair<std::vector<int>, CircleGroup>>{
             {{2, -1, 3}, CircleGroup::PSO2}, {{-1, -2, 3}, CircleGroup::PSO2},
             {{1, -2, 2}, CircleGroup::SO2}, {{-2, 1, 3}, CircleGroup::SO2}}) {
        auto f = fiber_tangent_weights(w, g);
        CHECK(f.size() == w.size() - 1);
        CHECK(sign_of_fixed_point(f) == sign_of_fixed_point(w));
    }
    CHECK_THROWS_AS(fiber_tangent_weights({3, 5}, CircleGroup::PSO2), Error);
    CHECK_THROWS_AS(sign_of_fixed_point({1, 0}), Error);
}

TEST_CASE("Hirzebruch models") {
    for (int q = 0; q <= 3; ++q)
        for (int a = -3; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                if (a == 0 && b == 0) continue;
                WeightGraph h;
                try {
                    h = hirzebruch_graph(q, a, b);
                } catch (const Error&) {
                    continue;  // zero weights
                }
                CHECK(h.rounds.size() + 2 * h.squares.size() == 4);
                if (b > 0) CHECK(oracle::isomorphic_bruteforce(h, hirzebruch_graph(q, -a, -b)));
                auto c = classify_fiber(h);
                CHECK(c.matched);
                CHECK(c.diffeotype == (q % 2 ? "ℂP²#ℂP̄²" : "S²×S²"));
            }
    CHECK(HirzebruchParams{2, -1, 2}.name() == "Hir(2;-1,2)");
    auto h10 = hirzebruch_graph(2, 1, 0);
    CHECK(h10.squares.size() == 2);
}

TEST_CASE("catalogue order") {
    auto cat = hirzebruch_catalogue(2, 3, 3);
    REQUIRE(!cat.empty());
    CHECK(cat.front() == HirzebruchParams{0, 1, 0});
    for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].q <= cat[i].q);
    for (const auto& h : cat) {
        CHECK((h.b > 0 || (h.a == 1 && h.b == 0)));
        if (h.q == 0 && h.b > 0) CHECK(std::abs(h.a) <= std::abs(h.b));
    }
}

TEST_CASE("connected sums") {
    auto h = hirzebruch_graph(0, 1, 2);
    std::string plus, minus;
    for (const auto& v : h.rounds) (v.sign > 0 ? plus : minus) = v.id;
    // pick a pair of opposite signs with equal incident weights
    bool glued = false;
    for (const auto& u : h.rounds)
        for (const auto& v : h.rounds)
            if (!glued && u.sign == -v.sign && h.incident_weights(u.id) == h.incident_weights(v.id)) {
                auto s = connected_sum(h, u.id, h, v.id);
                CHECK(s.rounds.size() == 6);
                glued = true;
            }
    CHECK(glued);
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        auto g = random_graph(rng);
        auto h = relabel(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(graphs_isomorphic(g, h));
    }
}

TEST_CASE("isomorphism agrees with brute force") {
    std::mt19937 rng(23);
    int positives = 0;
    for (int t = 0; t < 400; ++t) {
        auto g1 = random_graph(rng), g2 = random_graph(rng);
        bool iso = oracle::isomorphic_bruteforce(g1, g2);
        positives += iso;
        CHECK(graphs_isomorphic(g1, g2) == iso);
    }
    CHECK(positives > 0);
}

TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(graph({{"a", 1}, {"b", -1}}, {{"a", "b", 1}}), Error);
    CHECK_THROWS_AS(graph({{"a", 1}, {"a", -1}}, {}), Error);
    CHECK_THROWS_AS(graph({{"a", 1}}, {{"a", "z", 2}}), Error);
    CHECK_THROWS_AS(graph({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}},
                          {{"a", "b", 2}, {"a", "c", 2}, {"a", "d", 2}}),
                    Error);
}

TEST_CASE("unmatched graphs") {
    auto c = classify_fiber(graph({{"a", 1}, {"b", 1}}, {}));
    CHECK_FALSE(c.matched);
}

TEST_CASE("almost complex obstruction") {
    CHECK_FALSE(check_almost_complex_obstruction(0, 6));  // (S2xS2)#(S2xS2)
    CHECK(check_almost_complex_obstruction(0, 4));        // S2xS2
    CHECK(check_almost_complex_obstruction(1, 3));        // CP2
    CHECK(check_almost_complex_obstruction(-16, 24));     // K3
    CHECK_FALSE(check_almost_complex_obstruction(0, 2));  // S4
}

TEST_CASE("flag kind and group validation") {
    CHECK_THROWS_AS(run("3", FlagKind::Lagrangian), Error);   // odd dimension
    CHECK_THROWS_AS(run("3,1", FlagKind::Lagrangian), Error); // no invariant form
    CHECK_THROWS_AS(run("3", FlagKind::Full, CircleGroup::SO2), Error);
    CHECK_THROWS_AS(run("2,1,1", FlagKind::Full), Error);     // fixed locus too big
}
