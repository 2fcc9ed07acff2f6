#include "flagdod/twg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "flagdod/error.hpp"

namespace flagdod {

int hyperbolic_weight(CircleGroup g) { return g == CircleGroup::SO2 ? 2 : 1; }

std::string to_string(CircleGroup g) { return g == CircleGroup::SO2 ? "SO2" : "PSO2"; }

CircleGroup natural_group(const std::vector<int>& weights) {
    for (int w : weights)
        if ((w - weights.front()) % 2 != 0) return CircleGroup::SO2;
    return CircleGroup::PSO2;
}

void check_group(const std::vector<int>& weights, CircleGroup g) {
    if (g == CircleGroup::PSO2)
        require(natural_group(weights) == CircleGroup::PSO2,
                "PSO2 needs weights of a single parity");
}

namespace {

int divisor(CircleGroup g) { return g == CircleGroup::PSO2 ? 2 : 1; }

void check_order(const WeightedBasis& basis, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    require(sorted.size() == basis.size(), "flag order has the wrong length");
    for (std::size_t k = 0; k < sorted.size(); ++k)
        require(sorted[k] == k, "flag order is not a permutation of the basis");
}

// Block boundaries 0 = b_0 < d_1 < ... < d_l < n.
std::vector<int> boundaries(const Signature& sig) {
    std::vector<int> b{0};
    b.insert(b.end(), sig.dims.begin(), sig.dims.end());
    b.push_back(sig.ambient);
    return b;
}

ExactMatrix top_subspace(const std::vector<std::size_t>& order, int dim, std::size_t n) {
    ExactMatrix m(n, static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) m(order[k], k) = 1;
    return m;
}

std::string block_id(const WeightedBasis& basis, const std::vector<std::size_t>& order,
                     const Signature& sig) {
    auto b = boundaries(sig);
    std::string id;
    for (std::size_t r = 0; r + 2 < b.size(); ++r) {
        if (r) id += "|";
        for (int k = b[r]; k < b[r + 1]; ++k) {
            if (k > b[r]) id += ",";
            id += basis.labels[order[k]];
        }
    }
    return id;
}

}  // namespace

std::vector<int> DifferenceMatrix::values() const {
    std::vector<int> out;
    for (const auto& row : entries)
        for (const auto& e : row)
            if (e) out.push_back(*e);
    return out;
}

std::vector<std::pair<int, int>> chart_index_set(const Signature& sig) {
    sig.validate();
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= sig.ambient; ++i)
        for (int j = 1; j <= sig.ambient; ++j)
            for (int d : sig.dims)
                if (j <= d && d < i) {
                    out.emplace_back(i, j);
                    break;
                }
    return out;
}

DifferenceMatrix difference_matrix(const WeightedBasis& basis,
                                   const std::vector<std::size_t>& order,
                                   const Signature& sig, CircleGroup g) {
    require(static_cast<int>(basis.size()) == sig.ambient,
            "signature and weight basis have different dimensions");
    check_order(basis, order);
    check_group(basis.weights, g);
    const std::size_t n = basis.size();
    DifferenceMatrix D;
    for (std::size_t k : order) D.labels.push_back(basis.labels[k]);
    D.entries.assign(n, std::vector<std::optional<int>>(n));
    for (auto [i, j] : chart_index_set(sig))
        D.entries[i - 1][j - 1] =
            (basis.weights[order[i - 1]] - basis.weights[order[j - 1]]) / divisor(g);
    return D;
}

SymplecticForm weight_pairing_form(const WeightedBasis& basis, const Partition& p) {
    require(admits_symplectic_form(p), "partition admits no invariant symplectic form");
    const std::size_t n = basis.size();
    ExactMatrix g(n, n);
    auto members = [&](int part) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < n; ++k)
            if (basis.part_of[k] == part) out.push_back(k);
        return out;
    };
    auto set = [&](std::size_t u, std::size_t v, const GQ& c) {
        g(u, v) = c;
        g(v, u) = -c;
    };
    // The invariant pairing on V_d matches index k (weight d-1-2k) with index
    // d-1-k, proportional to (-1)^k / binom(d-1, k); scaled so the middle
    // pair is -1 or 1.
    auto binom = [](int m, int k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
        return b;
    };
    auto coefficient = [&](int d, std::size_t k) {
        const int m = d - 1;
        mpq_class c(binom(m, m / 2), binom(m, static_cast<int>(k)));
        c.canonicalize();
        return GQ(k % 2 == 0 ? mpq_class(-c) : c);
    };
    std::vector<bool> done(p.parts.size(), false);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (done[i]) continue;
        const int d = p.parts[i];
        auto mi = members(static_cast<int>(i));
        if (d % 2 == 0) {
            for (std::size_t k = 0; k < mi.size() / 2; ++k)
                set(mi[k], mi[mi.size() - 1 - k], coefficient(d, k));
            done[i] = true;
            continue;
        }
        std::size_t j = i + 1;
        while (j < p.parts.size() && (done[j] || p.parts[j] != d)) ++j;
        require(j < p.parts.size(), "odd part without a partner");
        auto mj = members(static_cast<int>(j));
        for (std::size_t k = 0; k < mi.size(); ++k) set(mi[k], mj[mj.size() - 1 - k], coefficient(d, k));
        done[i] = done[j] = true;
    }
    return SymplecticForm(g);
}

namespace {

struct ChartUnknown {
    int i, j;  // 1-based flag positions, i in the complement, j in the Lagrangian
    int weight;
};

struct ChartClass {
    int weight;
    std::vector<std::size_t> unknowns;
    std::size_t kernel_dim;
};

std::vector<ChartClass> lagrangian_chart(const WeightedBasis& basis,
                                         const std::vector<std::size_t>& order,
                                         const SymplecticForm& omega, CircleGroup g,
                                         std::vector<ChartUnknown>& unknowns) {
    check_order(basis, order);
    check_group(basis.weights, g);
    const std::size_t n = basis.size();
    require(omega.dim() == static_cast<int>(n), "form and weight basis have different dimensions");
    const int m = static_cast<int>(n) / 2;
    require(is_isotropic(top_subspace(order, m, n), omega), "flag is not Lagrangian");

    unknowns.clear();
    for (int j = 1; j <= m; ++j)
        for (int i = m + 1; i <= 2 * m; ++i)
            unknowns.push_back(
                {i, j, (basis.weights[order[i - 1]] - basis.weights[order[j - 1]]) / divisor(g)});
    auto unknown_index = [&](int i, int j) {
        return static_cast<std::size_t>((j - 1) * m + (i - m - 1));
    };
    auto form = [&](int a, int b) { return omega.gram(order[a - 1], order[b - 1]); };

    // omega(v_j + sum_i u_ij v_i, v_k + sum_i u_ik v_i) = 0, linear part.
    std::vector<std::vector<GQ>> rows;
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
            std::vector<GQ> row(unknowns.size());
            for (int i = m + 1; i <= 2 * m; ++i) {
                row[unknown_index(i, k)] += form(j, i);
                row[unknown_index(i, j)] += form(i, k);
            }
            rows.push_back(row);
        }
    for (const auto& row : rows) {
        std::set<int> ws;
        for (std::size_t u = 0; u < row.size(); ++u)
            if (!row[u].is_zero()) ws.insert(unknowns[u].weight);
        require(ws.size() <= 1, "symplectic form is not invariant under the circle action");
    }

    std::set<int, std::greater<>> weights;
    for (const auto& u : unknowns) weights.insert(u.weight);
    std::vector<ChartClass> out;
    for (int w : weights) {
        ChartClass c{w, {}, 0};
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (unknowns[u].weight == w) c.unknowns.push_back(u);
        std::size_t rank = 0;
        if (!rows.empty()) {
            ExactMatrix sub(rows.size(), c.unknowns.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t k = 0; k < c.unknowns.size(); ++k) sub(r, k) = rows[r][c.unknowns[k]];
            rank = sub.rank();
        }
        c.kernel_dim = c.unknowns.size() - rank;
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<int> tangent_weights_lagrangian(const WeightedBasis& basis,
                                            const std::vector<std::size_t>& order,
                                            const SymplecticForm& omega, CircleGroup g) {
    std::vector<ChartUnknown> unknowns;
    std::vector<int> out;
    for (const auto& c : lagrangian_chart(basis, order, omega, g, unknowns))
        out.insert(out.end(), c.kernel_dim, c.weight);
    return out;
}

int sign_of_fixed_point(const std::vector<int>& weights) {
    int s = 1;
    for (int w : weights) {
        require(w != 0, "zero tangent weight at a fixed point that should be isolated");
        if (w < 0) s = -s;
    }
    return s;
}

std::vector<std::size_t> canonical_order(const std::vector<std::size_t>& order,
                                         const Signature& sig) {
    require(static_cast<int>(order.size()) == sig.ambient, "flag order has the wrong length");
    auto b = boundaries(sig);
    std::vector<std::size_t> out = order;
    for (std::size_t r = 0; r + 1 < b.size(); ++r)
        std::sort(out.begin() + b[r], out.begin() + b[r + 1]);
    return out;
}

const FixedPoint* FixedLocus::find(const std::vector<std::size_t>& order,
                                   const Signature& sig) const {
    auto key = canonical_order(order, sig);
    for (const auto& p : isolated)
        if (p.order == key) return &p;
    return nullptr;
}

FixedLocus fixed_flags(const WeightedBasis& basis, const Signature& sig, CircleGroup g,
                       const std::optional<SymplecticForm>& omega) {
    sig.validate();
    require(static_cast<int>(basis.size()) == sig.ambient,
            "signature and weight basis have different dimensions");
    check_group(basis.weights, g);
    if (omega) require(omega->dim() == sig.ambient, "form and weight basis have different dimensions");
    const std::size_t n = basis.size();
    const auto bounds = boundaries(sig);
    const std::size_t blocks = bounds.size() - 1;
    const int top = sig.dims.back();

    std::set<int, std::greater<>> distinct(basis.weights.begin(), basis.weights.end());
    std::vector<std::vector<std::size_t>> classes;
    for (int w : distinct) {
        classes.emplace_back();
        for (std::size_t k = 0; k < n; ++k)
            if (basis.weights[k] == w) classes.back().push_back(k);
    }

    FixedLocus locus;
    std::vector<std::vector<int>> counts(classes.size(), std::vector<int>(blocks, 0));
    std::vector<int> capacity(blocks);
    for (std::size_t r = 0; r < blocks; ++r) capacity[r] = bounds[r + 1] - bounds[r];

    auto emit = [&]() {
        int dim = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            int m = static_cast<int>(classes[c].size()), sq = 0;
            for (int x : counts[c]) sq += x * x;
            dim += (m * m - sq) / 2;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> used(classes.size(), 0);
        for (std::size_t r = 0; r < blocks; ++r)
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int t = 0; t < counts[c][r]; ++t) order.push_back(classes[c][used[c]++]);

        if (dim == 0) {
            if (omega && !is_isotropic(top_subspace(order, top, n), *omega)) return;
            auto canon = canonical_order(order, sig);
            locus.isolated.push_back({block_id(basis, canon, sig), canon});
            return;
        }
        require(dim == 1, "fixed component of dimension " + std::to_string(dim) +
                              " is not supported");
        std::size_t c = 0;
        while (classes[c].size() != 2 || counts[c] == std::vector<int>(blocks, 0) ||
               std::count(counts[c].begin(), counts[c].end(), 1) != 2)
            ++c;
        const std::size_t a = classes[c][0], b = classes[c][1];
        if (omega) {
            std::size_t slot = std::find(order.begin(), order.end(), a) - order.begin();
            int isotropic = 0;
            for (int trial = 0; trial < 3; ++trial) {
                ExactMatrix U = top_subspace(order, top, n);
                if (static_cast<int>(slot) < top) {
                    for (std::size_t r = 0; r < n; ++r) U(r, slot) = 0;
                    if (trial != 1) U(a, slot) = 1;
                    if (trial != 0) U(b, slot) = 1;
                    // when both members lie in the top space the plane is fixed
                    auto other = std::find(order.begin(), order.begin() + top, b);
                    if (other != order.begin() + top) U = top_subspace(order, top, n);
                }
                if (is_isotropic(U, *omega)) ++isotropic;
            }
            if (isotropic == 0) return;
            require(isotropic == 3, "fixed projective line is only partly isotropic");
        }
        FixedSurface s;
        s.weight = basis.weights[a];
        s.pencil = {a, b};
        s.order = canonical_order(order, sig);
        s.id = "C" + std::to_string(locus.surfaces.size() + 1);
        locus.surfaces.push_back(s);
    };

    auto assign = [&](auto&& self, std::size_t c, std::size_t r, int left) -> void {
        if (c == classes.size()) {
            emit();
            return;
        }
        if (r + 1 == blocks) {
            if (left > capacity[r]) return;
            counts[c][r] = left;
            capacity[r] -= left;
            self(self, c + 1, 0, static_cast<int>(c + 1 < classes.size() ? classes[c + 1].size() : 0));
            capacity[r] += left;
            counts[c][r] = 0;
            return;
        }
        for (int x = std::min(left, capacity[r]); x >= 0; --x) {
            counts[c][r] = x;
            capacity[r] -= x;
            self(self, c, r + 1, left - x);
            capacity[r] += x;
        }
        counts[c][r] = 0;
    };
    assign(assign, 0, 0, static_cast<int>(classes[0].size()));
    return locus;
}

std::vector<SphereTarget> exceptional_sphere_targets(
    const WeightedBasis& basis, const std::vector<std::size_t>& order,
    const Signature& sig, CircleGroup g, const std::optional<SymplecticForm>& omega) {
    std::vector<SphereTarget> out;
    auto swapped = [&](const std::vector<std::pair<int, int>>& entries) {
        auto t = order;
        for (auto [i, j] : entries) std::swap(t[i - 1], t[j - 1]);
        return canonical_order(t, sig);
    };

    if (!omega) {
        auto D = difference_matrix(basis, order, sig, g);
        std::set<int> seen;
        for (auto [i, j] : chart_index_set(sig)) {
            int w = *D.entries[i - 1][j - 1];
            if (std::abs(w) < 2) continue;
            require(seen.insert(w).second,
                    "repeated chart weight " + std::to_string(w) + " gives no isolated sphere");
            out.push_back({{{i, j}}, swapped({{i, j}}), std::abs(w)});
        }
        return out;
    }

    const int m = sig.ambient / 2;
    require(sig.dims == std::vector<int>{m}, "isotropic spheres are implemented for Lagrangians");
    std::vector<ChartUnknown> unknowns;
    for (const auto& c : lagrangian_chart(basis, order, *omega, g, unknowns)) {
        if (std::abs(c.weight) < 2 || c.kernel_dim == 0) continue;
        require(c.kernel_dim == 1,
                "weight " + std::to_string(c.weight) + " class is not one-dimensional");
        std::vector<SphereTarget> hits;
        const std::size_t k = c.unknowns.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::pair<int, int>> entries;
            std::set<int> touched;
            bool disjoint = true;
            for (std::size_t t = 0; t < k; ++t) {
                if (!(mask >> t & 1)) continue;
                const auto& u = unknowns[c.unknowns[t]];
                disjoint = disjoint && touched.insert(u.i).second && touched.insert(u.j).second;
                entries.emplace_back(u.i, u.j);
            }
            if (!disjoint) continue;
            auto target = swapped(entries);
            if (is_isotropic(top_subspace(target, m, basis.size()), *omega))
                hits.push_back({entries, target, std::abs(c.weight)});
        }
        require(hits.size() == 1, "weight " + std::to_string(c.weight) +
                                      " direction does not close to a unique sphere");
        out.push_back(hits.front());
    }
    return out;
}

void WeightGraph::validate() const {
    std::set<std::string> ids, round_ids;
    for (const auto& v : rounds) {
        require(v.sign == 1 || v.sign == -1, "round vertex sign must be +1 or -1");
        require(ids.insert(v.id).second, "duplicate vertex id '" + v.id + "'");
        round_ids.insert(v.id);
    }
    for (const auto& s : squares) require(ids.insert(s.id).second, "duplicate vertex id '" + s.id + "'");
    std::map<std::string, int> degree;
    for (const auto& e : edges) {
        require(round_ids.count(e.a) && round_ids.count(e.b),
                "edges must join round vertices");
        require(e.a != e.b, "self-loop at '" + e.a + "'");
        require(e.weight >= 2, "edge weights must be at least 2");
        require(++degree[e.a] <= 2 && ++degree[e.b] <= 2,
                "more than two edges meet a vertex");
    }
}

const RoundVertex* WeightGraph::find_round(const std::string& id) const {
    for (const auto& v : rounds)
        if (v.id == id) return &v;
    return nullptr;
}

std::vector<int> WeightGraph::incident_weights(const std::string& id) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.a == id || e.b == id) out.push_back(e.weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> fiber_tangent_weights(const std::vector<int>& ambient, CircleGroup g) {
    const int h = hyperbolic_weight(g);
    std::vector<int> out = ambient;
    auto it = std::find(out.begin(), out.end(), h);
    bool flipped = false;
    if (it == out.end()) {
        it = std::find(out.begin(), out.end(), -h);
        flipped = true;
    }
    require(it != out.end(), "no tangent weight equal to the hyperbolic weight " +
                                 std::to_string(h));
    out.erase(it);
    if (flipped && !out.empty()) out.front() = -out.front();
    return out;
}

WeightGraph ambient_to_fiber_graph(const WeightGraph& ambient, CircleGroup g,
                                   const TangentData& tangent) {
    WeightGraph fiber;
    for (const auto& v : ambient.rounds) {
        auto it = tangent.weights.find(v.id);
        require(it != tangent.weights.end(), "no tangent data for vertex '" + v.id + "'");
        auto w = fiber_tangent_weights(it->second, g);
        require(sign_of_fixed_point(w) == v.sign, "fiber sign differs at '" + v.id + "'");
        fiber.rounds.push_back(v);
    }
    for (const auto& s : ambient.squares) {
        auto it = tangent.surface_euler.find(s.id);
        require(it != tangent.surface_euler.end(), "no Euler label for surface '" + s.id + "'");
        fiber.squares.push_back({s.id, it->second});
    }
    for (const auto& e : ambient.edges)
        if (!(g == CircleGroup::SO2 && e.weight == hyperbolic_weight(g))) fiber.edges.push_back(e);
    fiber.validate();
    return fiber;
}

int fixed_surface_euler(int ambient_c1_coeff, int surface_degree, int hyperplane_pairing) {
    require(surface_degree == 1, "Euler labels are computed for fixed projective lines only");
    return std::abs(ambient_c1_coeff * hyperplane_pairing - 2);
}

std::string HirzebruchParams::name() const {
    return "Hir(" + std::to_string(q) + ";" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string HirzebruchParams::diffeotype() const {
    return q % 2 == 0 ? "S²×S²" : "ℂP²#ℂP̄²";
}

WeightGraph hirzebruch_graph(int q, int a, int b) {
    require(q >= 0, "Hirzebruch index must be nonnegative");
    WeightGraph g;
    if (a == 1 && b == 0) {
        g.squares = {{"S13", q}, {"S24", -q}};
        return g;
    }
    require(a != 0 && b != 0 && std::gcd(a, b) == 1 && a + q * b != 0,
            "Hir(q;a,b) needs (a,b) = (1,0) or coprime nonzero a, b with a+qb != 0");
    auto sgn = [](long x) { return x > 0 ? 1 : -1; };
    const int s1 = sgn(static_cast<long>(a) * b);
    const int s4 = sgn(static_cast<long>(a) * b + static_cast<long>(q) * b * b);
    g.rounds = {{"p1", s1}, {"p2", -s1}, {"p3", -s4}, {"p4", s4}};
    auto add = [&](const char* u, const char* v, int w) {
        if (std::abs(w) >= 2) g.edges.push_back({u, v, std::abs(w)});
    };
    add("p1", "p2", a);
    add("p1", "p3", b);
    add("p2", "p4", b);
    add("p3", "p4", a + q * b);
    return g;
}

WeightGraph connected_sum(const WeightGraph& g1, const std::string& v1,
                          const WeightGraph& g2, const std::string& v2) {
    const RoundVertex* x = g1.find_round(v1);
    const RoundVertex* y = g2.find_round(v2);
    require(x && y, "connected sum needs round vertices");
    require(x->sign == -y->sign, "connected sum needs vertices of opposite sign");
    require(g1.incident_weights(v1) == g2.incident_weights(v2),
            "connected sum needs equal incident weights");

    WeightGraph out;
    auto copy = [&](const WeightGraph& g, const std::string& skip, const std::string& prefix,
                    std::vector<std::pair<int, std::string>>& dangling) {
        for (const auto& v : g.rounds)
            if (v.id != skip) out.rounds.push_back({prefix + v.id, v.sign});
        for (const auto& s : g.squares) out.squares.push_back({prefix + s.id, s.euler});
        for (const auto& e : g.edges) {
            if (e.a == skip)
                dangling.emplace_back(e.weight, prefix + e.b);
            else if (e.b == skip)
                dangling.emplace_back(e.weight, prefix + e.a);
            else
                out.edges.push_back({prefix + e.a, prefix + e.b, e.weight});
        }
        std::stable_sort(dangling.begin(), dangling.end(),
                         [](const auto& p, const auto& q) { return p.first < q.first; });
    };
    std::vector<std::pair<int, std::string>> d1, d2;
    copy(g1, v1, "a:", d1);
    copy(g2, v2, "b:", d2);
    for (std::size_t k = 0; k < d1.size(); ++k)
        out.edges.push_back({d1[k].second, d2[k].second, d1[k].first});
    return out;
}

CanonicalForm canonical_form(const WeightGraph& g) {
    g.validate();
    std::vector<std::string> plus, minus;
    for (const auto& v : g.rounds) (v.sign > 0 ? plus : minus).push_back(v.id);
    const std::size_t n = plus.size() + minus.size();
    require(n <= 10, "graphs with more than 10 round vertices are out of scope");

    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < plus.size(); ++k) index[plus[k]] = k;
    for (std::size_t k = 0; k < minus.size(); ++k) index[minus[k]] = plus.size() + k;
    std::vector<int> adj(n * n, 0);
    for (const auto& e : g.edges) {
        std::size_t a = index[e.a], b = index[e.b];
        adj[a * n + b] = adj[b * n + a] = e.weight;
    }

    CanonicalForm cf;
    cf.plus = static_cast<int>(plus.size());
    cf.minus = static_cast<int>(minus.size());
    for (const auto& s : g.squares) cf.squares.push_back(s.euler);
    std::sort(cf.squares.begin(), cf.squares.end());

    std::vector<std::size_t> pp(plus.size()), pm(minus.size());
    std::iota(pp.begin(), pp.end(), 0);
    std::iota(pm.begin(), pm.end(), plus.size());
    std::vector<int> candidate(n * n);
    bool first = true;
    do {
        do {
            std::vector<std::size_t> perm(pp);
            perm.insert(perm.end(), pm.begin(), pm.end());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) candidate[r * n + c] = adj[perm[r] * n + perm[c]];
            if (first || candidate < cf.adjacency) {
                cf.adjacency = candidate;
                first = false;
            }
        } while (std::next_permutation(pm.begin(), pm.end()));
    } while (std::next_permutation(pp.begin(), pp.end()));
    return cf;
}

bool graphs_isomorphic(const WeightGraph& g1, const WeightGraph& g2) {
    return canonical_form(g1) == canonical_form(g2);
}

std::vector<HirzebruchParams> hirzebruch_catalogue(int max_q, int max_a, int max_b) {
    std::vector<HirzebruchParams> out;
    for (int q = 0; q <= max_q; ++q) {
        out.push_back({q, 1, 0});
        for (int b = 1; b <= max_b; ++b)
            for (int absa = 1; absa <= max_a; ++absa)
                for (int a : {absa, -absa}) {
                    if (std::gcd(a, b) != 1 || a + q * b == 0) continue;
                    if (q == 0 && absa > b) continue;
                    out.push_back({q, a, b});
                }
    }
    return out;
}

namespace {

// Cheap invariants compared before the canonical form.
struct Shape {
    int plus = 0, minus = 0;
    std::vector<int> weights, squares;
    bool operator==(const Shape&) const = default;
};

Shape shape_of(const WeightGraph& g) {
    Shape s;
    for (const auto& v : g.rounds) (v.sign > 0 ? s.plus : s.minus)++;
    for (const auto& e : g.edges) s.weights.push_back(e.weight);
    for (const auto& q : g.squares) s.squares.push_back(q.euler);
    std::sort(s.weights.begin(), s.weights.end());
    std::sort(s.squares.begin(), s.squares.end());
    return s;
}

}  // namespace

Classification classify_fiber(const WeightGraph& g) {
    g.validate();
    int M = 1, E = 0;
    for (const auto& e : g.edges) M = std::max(M, e.weight);
    for (const auto& s : g.squares) E = std::max(E, std::abs(s.euler));
    const auto catalogue = hirzebruch_catalogue(std::max(2 * M, E), 1 + M, M);

    const Shape target_shape = shape_of(g);
    const CanonicalForm target = canonical_form(g);
    std::vector<WeightGraph> graphs;
    for (const auto& p : catalogue) {
        graphs.push_back(hirzebruch_graph(p.q, p.a, p.b));
        if (shape_of(graphs.back()) == target_shape && canonical_form(graphs.back()) == target)
            return {true, p.name(), p.diffeotype()};
    }

    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            const auto &gi = graphs[i], &gj = graphs[j];
            if (gi.rounds.size() + gj.rounds.size() != g.rounds.size() + 2 ||
                gi.squares.size() + gj.squares.size() != g.squares.size())
                continue;
            for (const auto& x : gi.rounds)
                for (const auto& y : gj.rounds) {
                    if (x.sign != -y.sign || gi.incident_weights(x.id) != gj.incident_weights(y.id))
                        continue;
                    WeightGraph sum = connected_sum(gi, x.id, gj, y.id);
                    if (shape_of(sum) == target_shape && canonical_form(sum) == target)
                        return {true, catalogue[i].name() + "#" + catalogue[j].name(),
                                "(" + catalogue[i].diffeotype() + ")#(" +
                                    catalogue[j].diffeotype() + ")"};
                }
        }
    return {false, "", "unknown"};
}

bool check_almost_complex_obstruction(int signature_of_form, int euler_char) {
    // c1 is characteristic and c1^2 = 2 chi + 3 sigma, so sigma + chi = 0 mod 4
    return ((signature_of_form + euler_char) % 4 + 4) % 4 == 0;
}

std::string to_string(FlagKind k) {
    switch (k) {
        case FlagKind::Full: return "full";
        case FlagKind::Projective: return "proj";
        case FlagKind::Lagrangian: return "lag";
    }
    return "";
}

CaseResult compute_case(const CaseSpec& spec) {
    CaseResult res;
    res.spec = spec;
    const Partition& p = spec.partition;
    p.validate();
    const int n = p.total();
    require(n >= 2, "flag varieties need dimension at least 2");
    res.basis = so2_weight_basis(p);
    res.group = spec.group.value_or(natural_group(res.basis.weights));
    check_group(res.basis.weights, res.group);

    RootSystemSpec root;
    RootSubset eta;
    int c1 = 0;
    switch (spec.flag) {
        case FlagKind::Full:
            res.signature = full_signature(n);
            root = {Family::TypeA, n - 1};
            eta = full_subset(root);
            break;
        case FlagKind::Projective:
            res.signature = {{1}, n};
            root = {Family::TypeA, n - 1};
            eta = {1};
            c1 = n;
            break;
        case FlagKind::Lagrangian:
            require(n % 2 == 0, "Lagrangian Grassmannians need an even dimension");
            res.signature = {{n / 2}, n};
            res.omega = weight_pairing_form(res.basis, p);
            root = {Family::TypeC, n / 2};
            eta = {n / 2};
            c1 = n / 2 + 1;
            break;
    }
    res.schubert_cells =
        static_cast<int>(double_cosets(root, full_subset(root), eta, false).size());

    res.locus = fixed_flags(res.basis, res.signature, res.group, res.omega);
    res.fixed_euler = static_cast<int>(res.locus.isolated.size() + 2 * res.locus.surfaces.size());

    TangentData tangent;
    for (const auto& pt : res.locus.isolated) {
        auto w = res.omega ? tangent_weights_lagrangian(res.basis, pt.order, *res.omega, res.group)
                           : difference_matrix(res.basis, pt.order, res.signature, res.group).values();
        res.ambient_weights[pt.id] = w;
        res.fiber_weights[pt.id] = fiber_tangent_weights(w, res.group);
        tangent.weights[pt.id] = w;
        res.ambient.rounds.push_back({pt.id, sign_of_fixed_point(w)});
    }

    std::set<std::tuple<std::string, std::string, int>> spheres;
    for (const auto& pt : res.locus.isolated)
        for (const auto& t : exceptional_sphere_targets(res.basis, pt.order, res.signature,
                                                        res.group, res.omega)) {
            const FixedPoint* other = res.locus.find(t.target, res.signature);
            require(other != nullptr, "sphere from '" + pt.id + "' ends off the isolated fixed set");
            spheres.emplace(std::min(pt.id, other->id), std::max(pt.id, other->id), t.weight);
        }
    for (const auto& pt : res.locus.isolated)
        for (const auto& other : res.locus.isolated)
            for (const auto& [a, b, w] : spheres)
                if (a == pt.id && b == other.id) res.ambient.edges.push_back({a, b, w});

    if (!res.locus.surfaces.empty()) {
        require(spec.flag != FlagKind::Full,
                "Euler labels of fixed surfaces need a Grassmannian ambient");
        require(res.locus.surfaces.size() <= 2, "more than two fixed surfaces");
        const int e = fixed_surface_euler(c1, 1, 1);
        int s = 1;
        for (const auto& surf : res.locus.surfaces) {
            res.ambient.squares.push_back({surf.id, 0});
            tangent.surface_euler[surf.id] = s * e;
            s = -s;
        }
    }

    res.fiber = ambient_to_fiber_graph(res.ambient, res.group, tangent);
    res.classification = classify_fiber(res.fiber);
    return res;
}

}  // namespace flagdod
