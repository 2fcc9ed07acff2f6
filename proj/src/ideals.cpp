#include "flagdod/ideals.hpp"

#include <algorithm>
#include <set>

#include "flagdod/error.hpp"

namespace flagdod {

bool Ideal::contains(std::size_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool is_downward_closed(const PositionPoset& P, const std::vector<std::size_t>& s) {
    std::vector<bool> in(P.size(), false);
    for (std::size_t i : s) {
        if (i >= P.size()) return false;
        in[i] = true;
    }
    for (std::size_t y = 0; y < P.size(); ++y) {
        if (!in[y]) continue;
        for (std::size_t x = 0; x < P.size(); ++x)
            if (P.leq(x, y) && !in[x]) return false;
    }
    return true;
}

Ideal make_ideal(const PositionPoset& P, std::vector<std::size_t> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t i : s) require(i < P.size(), "ideal member outside the poset");
    require(is_downward_closed(P, s), "members are not downward closed");
    return Ideal{std::move(s)};
}

Ideal down_closure(const PositionPoset& P, const std::vector<std::size_t>& gens) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t g : gens) {
            require(g < P.size(), "generator outside the poset");
            if (P.leq(x, g)) {
                out.push_back(x);
                break;
            }
        }
    return Ideal{out};
}

std::vector<std::size_t> generators(const PositionPoset& P, const Ideal& I) {
    std::vector<std::size_t> out;
    for (std::size_t a : I.members) {
        bool maximal = true;
        for (std::size_t b : I.members)
            if (a != b && P.leq(a, b)) maximal = false;
        if (maximal) out.push_back(a);
    }
    return out;
}

namespace {

void check(const PositionPoset& P, const Ideal& I) {
    require(P.w0_action.has_value(), "poset carries no w0-action");
    require(is_downward_closed(P, I.members), "members are not downward closed");
}

std::vector<std::size_t> complement_of(const PositionPoset& P, const Ideal& I) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (!I.contains(i)) out.push_back(i);
    return out;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::size_t> w0_image(const PositionPoset& P, const Ideal& I) {
    require(P.w0_action.has_value(), "poset carries no w0-action");
    std::vector<std::size_t> out;
    for (std::size_t i : I.members) out.push_back((*P.w0_action)[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_fat(const PositionPoset& P, const Ideal& I) {
    check(P, I);
    return subset(complement_of(P, I), w0_image(P, I));
}

bool is_slim(const PositionPoset& P, const Ideal& I) {
    check(P, I);
    return subset(w0_image(P, I), complement_of(P, I));
}

bool is_balanced(const PositionPoset& P, const Ideal& I) {
    return is_fat(P, I) && is_slim(P, I);
}

std::vector<Ideal> enumerate_balanced_ideals(const PositionPoset& P,
                                             std::string* diagnostic) {
    require(P.w0_action.has_value(), "poset carries no w0-action");
    const std::size_t n = P.size();
    if (n % 2 != 0) {
        if (diagnostic)
            *diagnostic = "poset has odd cardinality " + std::to_string(n) +
                          "; no balanced ideal exists";
        return {};
    }
    const std::size_t half = n / 2;
    std::set<std::vector<std::size_t>> found;

    // Depth-first over antichains in index order; each antichain generates a
    // distinct ideal, and closures only grow, so oversize branches are cut.
    std::vector<std::size_t> antichain;
    auto closure_of = [&](const std::vector<std::size_t>& gens) {
        return down_closure(P, gens);
    };
    auto visit = [&](auto&& self, std::size_t start) -> void {
        Ideal I = closure_of(antichain);
        if (I.members.size() > half) return;
        if (I.members.size() == half && is_balanced(P, I)) found.insert(I.members);
        for (std::size_t x = start; x < n; ++x) {
            bool incomparable = true;
            for (std::size_t a : antichain)
                if (P.leq(a, x) || P.leq(x, a)) incomparable = false;
            if (!incomparable) continue;
            antichain.push_back(x);
            self(self, x + 1);
            antichain.pop_back();
        }
    };
    visit(visit, 0);

    std::vector<Ideal> out;
    for (const auto& m : found) out.push_back(Ideal{m});
    if (diagnostic) diagnostic->clear();
    return out;
}

RootSubset minimal_anosov_type(const PositionPoset& P, const Ideal& I) {
    require(P.theta == full_subset(P.spec),
            "minimal_anosov_type needs the one-sided poset W/W_eta");
    check(P, I);
    require(is_balanced(P, I), "ideal is not balanced");
    const auto gens = simple_reflections(P.spec);
    RootSubset out;
    for (int k = 1; k <= P.spec.rank; ++k) {
        bool invariant = true;
        for (std::size_t m : I.members) {
            std::size_t image = P.index_of(multiply(gens[k - 1], P.elements[m].min_rep));
            if (!I.contains(image)) {
                invariant = false;
                break;
            }
        }
        if (!invariant) out.push_back(k);
    }
    return out;
}

bool thickening_membership(const PositionPoset& P, std::size_t position,
                           const Ideal& I) {
    require(position < P.size(), "position does not belong to this poset");
    require(is_downward_closed(P, I.members), "members are not downward closed");
    return I.contains(position);
}

bool thickening_membership(const PositionPoset& P, const WeylElement& w,
                           const Ideal& I) {
    return thickening_membership(P, P.index_of(w), I);
}

std::size_t invert_coset(const PositionPoset& from, std::size_t position,
                         const PositionPoset& to) {
    require(from.spec == to.spec && from.theta == to.eta && from.eta == to.theta,
            "invert_coset: target poset must have the swapped types");
    require(position < from.size(), "position does not belong to this poset");
    return to.index_of(inverse(from.elements[position].min_rep));
}

Ideal inverse_ideal(const PositionPoset& from, const Ideal& I,
                    const PositionPoset& to) {
    std::vector<std::size_t> out;
    for (std::size_t m : I.members) out.push_back(invert_coset(from, m, to));
    return make_ideal(to, out);
}

Ideal project_ideal(const PositionPoset& from, const Ideal& I,
                    const PositionPoset& to) {
    require(from.spec == to.spec && from.eta == to.eta,
            "project_ideal: posets must share the right type");
    std::vector<std::size_t> out;
    for (std::size_t m : I.members) out.push_back(to.index_of(from.elements[m].min_rep));
    return make_ideal(to, out);
}

std::string sign_label(const WeylElement& w) {
    require(w.family == Family::TypeC, "sign labels are for signed permutations");
    WeylElement inv = inverse(w);
    std::string s = "(";
    for (int k = 0; k < inv.degree(); ++k) {
        if (k) s += ",";
        s += inv.images[k] > 0 ? "+" : "-";
    }
    return s + ")";
}

}  // namespace flagdod
