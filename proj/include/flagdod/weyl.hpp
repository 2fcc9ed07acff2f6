#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagdod {

enum class Family { TypeA, TypeC };

struct RootSystemSpec {
    Family family = Family::TypeA;
    int rank = 1;

    // n for A_{n-1}, 2n for C_n.
    int ambient_dim() const;
    // Number of symbols the Weyl group permutes: rank+1 for A, rank for C.
    int degree() const;
    void validate() const;
    bool operator==(const RootSystemSpec&) const = default;
};

/// A permutation of {1..n} (type A) or a signed permutation of {±1..±n}
/// (type C). Only the images of 1..n are stored; for type C the value at
/// -j is the negative of the value at j.
struct WeylElement {
    Family family = Family::TypeA;
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int j) const;  // accepts negative j for type C
    void validate() const;
    bool is_identity() const;

    bool operator==(const WeylElement&) const = default;
    auto operator<=>(const WeylElement&) const = default;
};

// Subsets of simple roots are kept as sorted vectors of 1-based indices.
using RootSubset = std::vector<int>;

RootSubset full_subset(const RootSystemSpec& spec);
RootSubset normalize_subset(const RootSystemSpec& spec, RootSubset s);
RootSubset complement(const RootSystemSpec& spec, const RootSubset& s);

WeylElement identity_element(const RootSystemSpec& spec);
std::vector<WeylElement> simple_reflections(const RootSystemSpec& spec);

/// Group product. Both families compose as maps: (w1*w2)(j) = w1(w2(j)).
WeylElement multiply(const WeylElement& w1, const WeylElement& w2);
WeylElement inverse(const WeylElement& w);

/// Number of positive roots sent to negative roots.
int length(const WeylElement& w);

WeylElement longest_element(const RootSystemSpec& spec);

/// nu(alpha) = -w0(alpha), as a map on 1-based simple-root indices
/// (entry k-1 holds nu(k)).
std::vector<int> opposition_involution(const RootSystemSpec& spec);
RootSubset apply_opposition(const RootSystemSpec& spec, const RootSubset& s);

/// A reduced word (1-based simple-root indices) obtained by peeling off
/// right descents.
std::vector<int> reduced_word(const WeylElement& w);

/// Subword criterion against a fixed reduced word of w2.
bool bruhat_leq(const WeylElement& w1, const WeylElement& w2);

/// Every element of W, sorted by (length, images).
std::vector<WeylElement> all_elements(const RootSystemSpec& spec);

/// The subgroup generated by the simple reflections indexed by gens.
std::vector<WeylElement> parabolic_subgroup(const RootSystemSpec& spec,
                                            const RootSubset& gens);

RootSystemSpec spec_of(const WeylElement& w);

/// "213" for small type A elements, "(1 -2)" otherwise.
std::string to_string(const WeylElement& w);
/// Parses either compact digits ("213") or a parenthesised list ("(1 -2)").
WeylElement parse_element(Family family, const std::string& text);

struct DoubleCoset {
    WeylElement min_rep;
    RootSubset left_type;   // theta
    RootSubset right_type;  // eta
    std::vector<WeylElement> members;  // sorted
};

/// The set W_theta\W/W_eta with the induced Bruhat order. W_theta is
/// generated by the reflections of the roots outside theta, so theta = Delta
/// gives one-sided cosets W/W_eta.
struct PositionPoset {
    RootSystemSpec spec;
    RootSubset theta;
    RootSubset eta;
    std::vector<DoubleCoset> elements;       // sorted by (length, min_rep)
    std::vector<std::vector<bool>> order;    // order[a][b] iff a <= b
    std::optional<std::vector<std::size_t>> w0_action;

    std::size_t size() const { return elements.size(); }
    bool leq(std::size_t a, std::size_t b) const { return order[a][b]; }
    std::size_t index_of(const WeylElement& w) const;
    /// Pairs (a, b) with a covered by b.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

/// Canonical (Bruhat-minimal) representative of W_theta w W_eta.
DoubleCoset double_coset_of(const RootSystemSpec& spec, const RootSubset& theta,
                            const RootSubset& eta, const WeylElement& w);

PositionPoset double_cosets(const RootSystemSpec& spec, const RootSubset& theta,
                            const RootSubset& eta, bool with_w0_action = true);

}  // namespace flagdod
