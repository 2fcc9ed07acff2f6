#pragma once

// Brute-force reference implementations. Kept deliberately naive: they share
// only the data types with the library, not its algorithms.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flagdod/dims.hpp"
#include "flagdod/flags.hpp"
#include "flagdod/ideals.hpp"
#include "flagdod/twg.hpp"

namespace oracle {

using namespace flagdod;

inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement w{a.family, std::vector<int>(b.images.size())};
    for (std::size_t j = 0; j < b.images.size(); ++j) {
        int v = b.images[j];
        int img = a.images[std::abs(v) - 1];
        w.images[j] = v > 0 ? img : -img;
    }
    return w;
}

inline std::vector<WeylElement> generators(const RootSystemSpec& spec) {
    const int d = spec.degree();
    std::vector<WeylElement> out;
    for (int k = 1; k < d; ++k) {
        WeylElement s{spec.family, {}};
        for (int j = 1; j <= d; ++j) s.images.push_back(j);
        std::swap(s.images[k - 1], s.images[k]);
        out.push_back(s);
    }
    if (spec.family == Family::TypeC) {
        WeylElement s{spec.family, {}};
        for (int j = 1; j <= d; ++j) s.images.push_back(j);
        s.images[d - 1] = -d;
        out.push_back(s);
    }
    return out;
}

/// Word length by breadth-first search on the Cayley graph.
inline std::map<WeylElement, int> bfs_lengths(const RootSystemSpec& spec) {
    const int d = spec.degree();
    WeylElement e{spec.family, {}};
    for (int j = 1; j <= d; ++j) e.images.push_back(j);
    std::map<WeylElement, int> dist{{e, 0}};
    std::vector<WeylElement> frontier{e};
    const auto gens = generators(spec);
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                auto ws = compose(w, s);
                if (dist.emplace(ws, dist[w] + 1).second) next.push_back(ws);
            }
        frontier = std::move(next);
    }
    return dist;
}

/// All reflections, written directly as (signed) transpositions.
inline std::vector<WeylElement> reflections(const RootSystemSpec& spec) {
    const int d = spec.degree();
    std::vector<int> id;
    for (int j = 1; j <= d; ++j) id.push_back(j);
    std::vector<WeylElement> out;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            WeylElement t{spec.family, id};
            t.images[i - 1] = j;
            t.images[j - 1] = i;
            out.push_back(t);
            if (spec.family == Family::TypeC) {
                t.images[i - 1] = -j;
                t.images[j - 1] = -i;
                out.push_back(t);
            }
        }
    if (spec.family == Family::TypeC)
        for (int i = 1; i <= d; ++i) {
            WeylElement t{spec.family, id};
            t.images[i - 1] = -i;
            out.push_back(t);
        }
    return out;
}

/// Bruhat order as the transitive closure of u < u t with l(u t) > l(u).
struct BruhatOracle {
    std::map<WeylElement, int> length;
    std::vector<WeylElement> elements;
    std::map<WeylElement, std::size_t> index;
    std::vector<std::vector<bool>> leq;

    explicit BruhatOracle(const RootSystemSpec& spec) : length(bfs_lengths(spec)) {
        for (const auto& [w, l] : length) {
            index[w] = elements.size();
            elements.push_back(w);
        }
        const std::size_t n = elements.size();
        leq.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : reflections(spec)) {
                auto ut = compose(elements[i], t);
                if (length[ut] > length[elements[i]]) leq[i][index[ut]] = true;
            }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq[k][j]) leq[i][j] = true;
    }
    bool operator()(const WeylElement& u, const WeylElement& v) const {
        return leq[index.at(u)][index.at(v)];
    }
};

/// Tableau criterion for permutations in one-line notation.
inline bool tableau_leq(const WeylElement& u, const WeylElement& v) {
    const int n = u.degree();
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            int cu = 0, cv = 0;
            for (int j = 0; j < i; ++j) {
                cu += u.images[j] >= k;
                cv += v.images[j] >= k;
            }
            if (cu > cv) return false;
        }
    return true;
}

/// Balanced ideals of a one-sided poset by filtering every subset. The order
/// is the oracle Bruhat order on minimal representatives and w0 acts by left
/// multiplication on coset members.
inline std::vector<std::vector<std::size_t>> balanced_ideals_bruteforce(const PositionPoset& P) {
    const std::size_t n = P.size();
    BruhatOracle B(P.spec);
    auto coset_of = [&](const WeylElement& w) {
        for (std::size_t i = 0; i < n; ++i)
            if (std::binary_search(P.elements[i].members.begin(), P.elements[i].members.end(), w))
                return i;
        return n;
    };
    WeylElement w0;
    int best = -1;
    for (const auto& [w, l] : B.length)
        if (l > best) {
            best = l;
            w0 = w;
        }
    std::vector<std::size_t> w0_of(n);
    for (std::size_t i = 0; i < n; ++i) w0_of[i] = coset_of(compose(w0, P.elements[i].min_rep));

    std::vector<std::vector<std::size_t>> out;
    if (n % 2 || n > 24) return out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != n / 2) continue;
        bool ok = true;
        for (std::size_t y = 0; y < n && ok; ++y) {
            if (!(mask >> y & 1)) continue;
            if (mask >> w0_of[y] & 1) ok = false;
            for (std::size_t x = 0; x < n && ok; ++x)
                if (!(mask >> x & 1) && B(P.elements[x].min_rep, P.elements[y].min_rep)) ok = false;
        }
        if (!ok) continue;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(i);
        out.push_back(members);
    }
    return out;
}

inline std::size_t rank_of(const ExactMatrix& m) { return m.rank(); }

/// The permutation whose D table matches, found by trying all of S_n.
/// Returns an empty vector when none or several match.
inline std::vector<int> dtable_permutation(const std::vector<ExactMatrix>& F,
                                           const std::vector<ExactMatrix>& H) {
    const int n = static_cast<int>(F.size());
    std::vector<std::vector<int>> D(n, std::vector<int>(n + 1, 0));
    for (int j = 0; j < n; ++j)
        for (int k = 1; k <= n; ++k)
            D[j][k] = static_cast<int>(F[k - 1].rank() + H[j].rank() - F[k - 1].hconcat(H[j]).rank());
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = j + 1;
    std::vector<int> found;
    int matches = 0;
    do {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            for (int k = 1; k <= n && ok; ++k) {
                int c = 0;
                for (int i = 0; i <= j; ++i) c += sigma[i] <= k;
                ok = c == D[j][k];
            }
        if (ok) {
            found = sigma;
            ++matches;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return matches == 1 ? found : std::vector<int>{};
}

inline std::vector<ExactMatrix> chain(const ExactFlag& F) {
    std::vector<ExactMatrix> out;
    for (int k = 1; k <= F.ambient(); ++k) out.push_back(F.subspace(k));
    return out;
}

inline GQ small_entry(std::mt19937& rng, bool complex_entries) {
    std::uniform_int_distribution<int> d(-2, 2);
    return complex_entries ? GQ(mpq_class(d(rng)), mpq_class(d(rng))) : GQ(d(rng));
}

/// Product of random elementary matrices and a random permutation.
inline ExactMatrix random_invertible(std::size_t n, std::mt19937& rng, bool complex_entries = true) {
    ExactMatrix g = ExactMatrix::identity(n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = 1;
    g = p;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        ExactMatrix e = ExactMatrix::identity(n);
        e(i, j) = small_entry(rng, complex_entries);
        g = e * g;
    }
    return g;
}

/// Random upper unitriangular matrix (stabilises the standard flag).
inline ExactMatrix random_unitriangular(std::size_t n, std::mt19937& rng) {
    ExactMatrix u = ExactMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = small_entry(rng, true);
    return u;
}

/// Product of random symplectic transvections x -> x + c omega(v, x) v.
inline ExactMatrix random_symplectic(const SymplecticForm& omega, std::mt19937& rng, int steps = 6) {
    const std::size_t N = static_cast<std::size_t>(omega.dim());
    ExactMatrix g = ExactMatrix::identity(N);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int s = 0; s < steps; ++s) {
        ExactMatrix v(N, 1);
        for (std::size_t i = 0; i < N; ++i) v(i, 0) = small_entry(rng, s % 2 == 1);
        ExactMatrix t = ExactMatrix::identity(N);
        ExactMatrix vw = v.transpose() * omega.gram;
        GQ k = c(rng);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t q = 0; q < N; ++q) t(r, q) += k * v(r, 0) * vw(0, q);
        g = t * g;
    }
    return g;
}

/// Brute-force isomorphism: every bijection of round vertices preserving
/// signs, edges and weights; square labels compared as multisets.
inline bool isomorphic_bruteforce(const WeightGraph& g1, const WeightGraph& g2) {
    if (g1.rounds.size() != g2.rounds.size() || g1.squares.size() != g2.squares.size() ||
        g1.edges.size() != g2.edges.size())
        return false;
    std::multiset<int> s1, s2;
    for (const auto& s : g1.squares) s1.insert(s.euler);
    for (const auto& s : g2.squares) s2.insert(s.euler);
    if (s1 != s2) return false;
    const std::size_t n = g1.rounds.size();
    auto matrix = [&](const WeightGraph& g) {
        std::map<std::string, std::size_t> at;
        for (std::size_t i = 0; i < n; ++i) at[g.rounds[i].id] = i;
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (const auto& e : g.edges) m[at[e.a]][at[e.b]] = m[at[e.b]][at[e.a]] = e.weight;
        return m;
    };
    auto m1 = matrix(g1), m2 = matrix(g2);
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = g1.rounds[i].sign == g2.rounds[p[i]].sign;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = m1[i][j] == m2[p[i]][p[j]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Root systems in coordinates: positive roots and simple roots.
struct RootData {
    std::vector<std::vector<int>> positive, simple;
};

inline RootData root_data(GroupFamily family, int n) {
    RootData r;
    auto vec = [](int dim, std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> v(dim, 0);
        for (auto [i, c] : entries) v[i] += c;
        return v;
    };
    if (family == GroupFamily::SL) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) r.positive.push_back(vec(n, {{i, 1}, {j, -1}}));
        for (int i = 0; i + 1 < n; ++i) r.simple.push_back(vec(n, {{i, 1}, {i + 1, -1}}));
        return r;
    }
    const int p = family == GroupFamily::Sp ? n : n / 2;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            r.positive.push_back(vec(p, {{i, 1}, {j, -1}}));
            r.positive.push_back(vec(p, {{i, 1}, {j, 1}}));
        }
    for (int i = 0; i + 1 < p; ++i) r.simple.push_back(vec(p, {{i, 1}, {i + 1, -1}}));
    if (family == GroupFamily::Sp) {
        for (int i = 0; i < p; ++i) r.positive.push_back(vec(p, {{i, 2}}));
        r.simple.push_back(vec(p, {{p - 1, 2}}));
    } else if (n % 2 == 1) {
        for (int i = 0; i < p; ++i) r.positive.push_back(vec(p, {{i, 1}}));
        r.simple.push_back(vec(p, {{p - 1, 1}}));
    } else {
        r.simple.push_back(vec(p, {{p - 2, 1}, {p - 1, 1}}));
    }
    return r;
}

/// Coefficients of a root in the simple roots, by Gaussian elimination.
inline std::vector<double> simple_coefficients(const RootData& r, const std::vector<int>& root) {
    const std::size_t k = r.simple.size(), dim = root.size();
    // least squares via normal equations; the system is consistent
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < dim; ++c) a[i][j] += r.simple[i][c] * r.simple[j][c];
        for (std::size_t c = 0; c < dim; ++c) a[i][k] += r.simple[i][c] * root[c];
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col; i < k; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == col) continue;
            double f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = a[i][k] / a[i][i];
    return out;
}

/// dim G/P = number of positive roots involving a marked simple root.
inline int flag_dim_rootcount(const FlagVarietyDescriptor& d) {
    const RootData r = root_data(d.family, d.n);
    const int rank = static_cast<int>(r.simple.size());
    std::set<int> marked;  // 0-based simple roots
    for (const auto& idx : d.indices) {
        if (idx.half > 0) marked.insert(rank - 1);
        else if (idx.half < 0) marked.insert(rank - 2);
        else marked.insert(idx.k - 1);
    }
    int count = 0;
    for (const auto& root : r.positive) {
        auto c = simple_coefficients(r, root);
        for (int m : marked)
            if (std::abs(c[m]) > 1e-9) {
                ++count;
                break;
            }
    }
    return count;
}

/// Recursive-descent check against the DOT grammar (graph/digraph, node,
/// edge and attribute statements, quoted or bare IDs).
class DotParser {
public:
    explicit DotParser(std::string text) : s_(std::move(text)) {}

    bool parse() {
        try {
            ws();
            if (keyword("strict")) ws();
            bool directed = false;
            if (keyword("digraph")) directed = true;
            else if (!keyword("graph")) return false;
            edge_op_ = directed ? "->" : "--";
            ws();
            if (peek() != '{') id();
            ws();
            expect('{');
            stmt_list();
            expect('}');
            ws();
            return pos_ == s_.size();
        } catch (const std::runtime_error&) {
            return false;
        }
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
    std::string edge_op_;

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        ws();
        if (peek() != c) throw std::runtime_error("expected char");
        ++pos_;
    }
    bool keyword(const std::string& k) {
        if (s_.compare(pos_, k.size(), k) != 0) return false;
        char after = pos_ + k.size() < s_.size() ? s_[pos_ + k.size()] : ' ';
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
        pos_ += k.size();
        return true;
    }
    void id() {
        ws();
        char c = peek();
        if (c == '"') {
            ++pos_;
            while (pos_ < s_.size() && s_[pos_] != '"') pos_ += s_[pos_] == '\\' ? 2 : 1;
            if (pos_ >= s_.size()) throw std::runtime_error("unterminated string");
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.') {
            if (c == '-') ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.')
                throw std::runtime_error("bad numeral");
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
        } else {
            throw std::runtime_error("expected id");
        }
    }
    void attr_list() {
        while (true) {
            ws();
            if (peek() != '[') return;
            ++pos_;
            ws();
            while (peek() != ']') {
                id();
                expect('=');
                id();
                ws();
                if (peek() == ',' || peek() == ';') ++pos_;
                ws();
            }
            ++pos_;
        }
    }
    void stmt_list() {
        while (true) {
            ws();
            if (peek() == '}' || peek() == '\0') return;
            if (keyword("graph") || keyword("node") || keyword("edge")) {
                attr_list();
            } else {
                id();
                ws();
                if (peek() == '=') {
                    ++pos_;
                    id();
                } else {
                    bool edge = false;
                    while (ws(), s_.compare(pos_, 2, edge_op_) == 0) {
                        pos_ += 2;
                        id();
                        edge = true;
                    }
                    (void)edge;
                    attr_list();
                }
            }
            ws();
            if (peek() == ';') ++pos_;
        }
    }
};

inline bool parses_as_dot(const std::string& text) { return DotParser(text).parse(); }

}  // namespace oracle
