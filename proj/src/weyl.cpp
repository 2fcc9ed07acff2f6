#include "flagdod/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "flagdod/error.hpp"

namespace flagdod {

int RootSystemSpec::ambient_dim() const {
    return family == Family::TypeA ? rank + 1 : 2 * rank;
}

int RootSystemSpec::degree() const {
    return family == Family::TypeA ? rank + 1 : rank;
}

void RootSystemSpec::validate() const {
    require(rank >= 1, "rank must be positive");
    require(rank <= 8, "rank above 8 is outside the supported range");
}

int WeylElement::operator()(int j) const {
    int a = std::abs(j);
    require(a >= 1 && a <= degree(), "index out of range for Weyl element");
    if (j < 0) {
        require(family == Family::TypeC, "negative index on a type A element");
        return -images[a - 1];
    }
    return images[a - 1];
}

void WeylElement::validate() const {
    const int n = degree();
    require(n >= 1, "empty Weyl element");
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
        int a = std::abs(v);
        require(a >= 1 && a <= n, "Weyl element image out of range");
        require(family == Family::TypeC || v > 0,
                "type A element with a negative image");
        require(!seen[a], "Weyl element images are not a bijection");
        seen[a] = true;
    }
}

bool WeylElement::is_identity() const {
    for (int j = 0; j < degree(); ++j)
        if (images[j] != j + 1) return false;
    return true;
}

RootSubset full_subset(const RootSystemSpec& spec) {
    RootSubset s(spec.rank);
    for (int k = 0; k < spec.rank; ++k) s[k] = k + 1;
    return s;
}

RootSubset normalize_subset(const RootSystemSpec& spec, RootSubset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int k : s)
        require(k >= 1 && k <= spec.rank, "simple root index out of range");
    return s;
}

RootSubset complement(const RootSystemSpec& spec, const RootSubset& s) {
    RootSubset out;
    for (int k = 1; k <= spec.rank; ++k)
        if (!std::binary_search(s.begin(), s.end(), k)) out.push_back(k);
    return out;
}

RootSystemSpec spec_of(const WeylElement& w) {
    return {w.family, w.family == Family::TypeA ? w.degree() - 1 : w.degree()};
}

WeylElement identity_element(const RootSystemSpec& spec) {
    spec.validate();
    WeylElement e{spec.family, std::vector<int>(spec.degree())};
    for (int j = 0; j < spec.degree(); ++j) e.images[j] = j + 1;
    return e;
}

std::vector<WeylElement> simple_reflections(const RootSystemSpec& spec) {
    std::vector<WeylElement> out;
    const int n = spec.degree();
    for (int k = 1; k <= spec.rank; ++k) {
        WeylElement s = identity_element(spec);
        if (spec.family == Family::TypeC && k == n)
            s.images[n - 1] = -n;
        else
            std::swap(s.images[k - 1], s.images[k]);
        out.push_back(std::move(s));
    }
    return out;
}

WeylElement multiply(const WeylElement& w1, const WeylElement& w2) {
    require(w1.family == w2.family && w1.degree() == w2.degree(),
            "multiply: family or rank mismatch");
    WeylElement out{w1.family, std::vector<int>(w1.degree())};
    for (int j = 1; j <= w1.degree(); ++j) out.images[j - 1] = w1(w2(j));
    return out;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement out{w.family, std::vector<int>(w.degree())};
    for (int j = 1; j <= w.degree(); ++j) {
        int v = w.images[j - 1];
        out.images[std::abs(v) - 1] = v > 0 ? j : -j;
    }
    return out;
}

namespace {

using Root = std::vector<int>;

std::vector<Root> positive_roots(Family family, int n) {
    std::vector<Root> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Root r(n, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
            if (family == Family::TypeC) {
                r[j] = 1;
                roots.push_back(r);
            }
        }
    if (family == Family::TypeC)
        for (int i = 0; i < n; ++i) {
            Root r(n, 0);
            r[i] = 2;
            roots.push_back(r);
        }
    return roots;
}

bool is_positive(const Root& r) {
    for (int c : r)
        if (c != 0) return c > 0;
    return false;
}

Root act(const WeylElement& w, const Root& r) {
    Root out(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int v = w.images[i];
        out[std::abs(v) - 1] += v > 0 ? r[i] : -r[i];
    }
    return out;
}

}  // namespace

int length(const WeylElement& w) {
    int count = 0;
    for (const Root& r : positive_roots(w.family, w.degree()))
        if (!is_positive(act(w, r))) ++count;
    return count;
}

WeylElement longest_element(const RootSystemSpec& spec) {
    WeylElement w = identity_element(spec);
    const int n = spec.degree();
    for (int j = 1; j <= n; ++j)
        w.images[j - 1] = spec.family == Family::TypeA ? n - j + 1 : -j;
    return w;
}

std::vector<int> opposition_involution(const RootSystemSpec& spec) {
    spec.validate();
    std::vector<int> nu(spec.rank);
    for (int k = 1; k <= spec.rank; ++k)
        nu[k - 1] = spec.family == Family::TypeA ? spec.rank + 1 - k : k;
    return nu;
}

RootSubset apply_opposition(const RootSystemSpec& spec, const RootSubset& s) {
    auto nu = opposition_involution(spec);
    RootSubset out;
    for (int k : s) out.push_back(nu[k - 1]);
    return normalize_subset(spec, out);
}

std::vector<int> reduced_word(const WeylElement& w) {
    const auto gens = simple_reflections(spec_of(w));
    std::vector<int> word;
    WeylElement cur = w;
    int len = length(cur);
    while (len > 0) {
        bool found = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            WeylElement next = multiply(cur, gens[k]);
            int l = length(next);
            if (l < len) {
                word.push_back(static_cast<int>(k) + 1);
                cur = std::move(next);
                len = l;
                found = true;
                break;
            }
        }
        require(found, "reduced_word: no descent found");
    }
    std::reverse(word.begin(), word.end());
    return word;
}

namespace {

// Products of all subwords of a reduced word of w; this is the interval [e, w].
std::set<WeylElement> lower_interval(const WeylElement& w) {
    const auto gens = simple_reflections(spec_of(w));
    std::set<WeylElement> reach{identity_element(spec_of(w))};
    for (int k : reduced_word(w)) {
        std::vector<WeylElement> added;
        for (const auto& x : reach) added.push_back(multiply(x, gens[k - 1]));
        reach.insert(added.begin(), added.end());
    }
    return reach;
}

std::vector<WeylElement> closure(const RootSystemSpec& spec,
                                 const std::vector<WeylElement>& gens) {
    std::set<WeylElement> seen{identity_element(spec)};
    std::deque<WeylElement> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        WeylElement x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            WeylElement y = multiply(x, g);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

void sort_by_length(std::vector<WeylElement>& v) {
    std::vector<std::pair<int, WeylElement>> keyed;
    for (auto& w : v) keyed.emplace_back(length(w), std::move(w));
    std::sort(keyed.begin(), keyed.end());
    v.clear();
    for (auto& [l, w] : keyed) v.push_back(std::move(w));
}

}  // namespace

bool bruhat_leq(const WeylElement& w1, const WeylElement& w2) {
    require(w1.family == w2.family && w1.degree() == w2.degree(),
            "bruhat_leq: family or rank mismatch");
    if (length(w1) > length(w2)) return false;
    return lower_interval(w2).count(w1) > 0;
}

std::vector<WeylElement> all_elements(const RootSystemSpec& spec) {
    auto out = closure(spec, simple_reflections(spec));
    sort_by_length(out);
    return out;
}

std::vector<WeylElement> parabolic_subgroup(const RootSystemSpec& spec,
                                            const RootSubset& gens) {
    const auto s = simple_reflections(spec);
    std::vector<WeylElement> g;
    for (int k : normalize_subset(spec, gens)) g.push_back(s[k - 1]);
    auto out = closure(spec, g);
    sort_by_length(out);
    return out;
}

std::string to_string(const WeylElement& w) {
    std::ostringstream os;
    if (w.family == Family::TypeA && w.degree() <= 9) {
        for (int v : w.images) os << v;
        return os.str();
    }
    os << '(';
    for (int j = 0; j < w.degree(); ++j) os << (j ? " " : "") << w.images[j];
    os << ')';
    return os.str();
}

WeylElement parse_element(Family family, const std::string& text) {
    WeylElement w{family, {}};
    std::string t = text;
    bool listed = t.find('(') != std::string::npos ||
                  t.find(' ') != std::string::npos ||
                  t.find(',') != std::string::npos ||
                  t.find('-') != std::string::npos;
    if (listed) {
        for (char& c : t)
            if (c == '(' || c == ')' || c == ',') c = ' ';
        std::istringstream is(t);
        int v;
        while (is >> v) w.images.push_back(v);
        require(is.eof(), "cannot parse Weyl element '" + text + "'");
    } else {
        for (char c : t) {
            require(c >= '1' && c <= '9', "cannot parse Weyl element '" + text + "'");
            w.images.push_back(c - '0');
        }
    }
    w.validate();
    return w;
}

DoubleCoset double_coset_of(const RootSystemSpec& spec, const RootSubset& theta,
                            const RootSubset& eta, const WeylElement& w) {
    require(spec_of(w) == spec, "double_coset_of: element does not match spec");
    RootSubset th = normalize_subset(spec, theta), et = normalize_subset(spec, eta);
    auto left = parabolic_subgroup(spec, complement(spec, th));
    auto right = parabolic_subgroup(spec, complement(spec, et));
    std::set<WeylElement> members;
    for (const auto& a : left)
        for (const auto& b : right) members.insert(multiply(multiply(a, w), b));
    DoubleCoset c{*members.begin(), th, et, {members.begin(), members.end()}};
    int best = -1;
    int ties = 0;
    for (const auto& m : c.members) {
        int l = length(m);
        if (best < 0 || l < best) {
            best = l;
            c.min_rep = m;
            ties = 1;
        } else if (l == best) {
            ++ties;
        }
    }
    require(ties == 1, "double coset without a unique minimal element");
    return c;
}

std::size_t PositionPoset::index_of(const WeylElement& w) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (std::binary_search(elements[i].members.begin(),
                               elements[i].members.end(), w))
            return i;
    throw Error("element " + to_string(w) + " is not in this poset");
}

std::vector<std::pair<std::size_t, std::size_t>> PositionPoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !order[a][b]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (c != a && c != b && order[a][c] && order[c][b]) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

PositionPoset double_cosets(const RootSystemSpec& spec, const RootSubset& theta,
                            const RootSubset& eta, bool with_w0_action) {
    spec.validate();
    PositionPoset P{spec, normalize_subset(spec, theta), normalize_subset(spec, eta),
                    {}, {}, std::nullopt};
    if (with_w0_action)
        require(apply_opposition(spec, P.theta) == P.theta,
                "theta is not self-opposite; the w0-action is undefined");

    std::set<WeylElement> assigned;
    for (const auto& w : all_elements(spec)) {
        if (assigned.count(w)) continue;
        DoubleCoset c = double_coset_of(spec, P.theta, P.eta, w);
        assigned.insert(c.members.begin(), c.members.end());
        P.elements.push_back(std::move(c));
    }
    std::sort(P.elements.begin(), P.elements.end(),
              [](const DoubleCoset& a, const DoubleCoset& b) {
                  int la = length(a.min_rep), lb = length(b.min_rep);
                  return la != lb ? la < lb : a.min_rep < b.min_rep;
              });

    const std::size_t n = P.elements.size();
    P.order.assign(n, std::vector<bool>(n, false));
    for (std::size_t b = 0; b < n; ++b) {
        auto below = lower_interval(P.elements[b].min_rep);
        for (std::size_t a = 0; a < n; ++a)
            P.order[a][b] = below.count(P.elements[a].min_rep) > 0;
    }

    if (with_w0_action) {
        const WeylElement w0 = longest_element(spec);
        std::vector<std::size_t> act(n);
        for (std::size_t i = 0; i < n; ++i)
            act[i] = P.index_of(multiply(w0, P.elements[i].min_rep));
        P.w0_action = std::move(act);
    }
    return P;
}

}  // namespace flagdod
