#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagdod/weyl.hpp"

namespace flagdod {

/// A downward-closed set of positions, stored as sorted indices into the
/// poset it was built against.
struct Ideal {
    std::vector<std::size_t> members;
    bool contains(std::size_t i) const;
    bool operator==(const Ideal&) const = default;
};

bool is_downward_closed(const PositionPoset& P, const std::vector<std::size_t>& s);
/// Validates and sorts; throws when s is not downward closed.
Ideal make_ideal(const PositionPoset& P, std::vector<std::size_t> s);
/// Smallest ideal containing the given generators.
Ideal down_closure(const PositionPoset& P, const std::vector<std::size_t>& gens);
/// Maximal elements of I.
std::vector<std::size_t> generators(const PositionPoset& P, const Ideal& I);

std::vector<std::size_t> w0_image(const PositionPoset& P, const Ideal& I);
bool is_fat(const PositionPoset& P, const Ideal& I);
bool is_slim(const PositionPoset& P, const Ideal& I);
bool is_balanced(const PositionPoset& P, const Ideal& I);

/// All balanced ideals. Odd |P| yields an empty list and, if requested, a
/// diagnostic explaining why.
std::vector<Ideal> enumerate_balanced_ideals(const PositionPoset& P,
                                             std::string* diagnostic = nullptr);

/// Simple roots alpha with s_alpha * I != I, for an ideal of W/W_eta.
/// I depends on a flag of type theta' exactly when theta' contains this set.
RootSubset minimal_anosov_type(const PositionPoset& P, const Ideal& I);

bool thickening_membership(const PositionPoset& P, std::size_t position,
                           const Ideal& I);
bool thickening_membership(const PositionPoset& P, const WeylElement& w,
                           const Ideal& I);

/// [w] -> [w^-1], from W_theta\W/W_eta to W_eta\W/W_theta.
std::size_t invert_coset(const PositionPoset& from, std::size_t position,
                         const PositionPoset& to);
Ideal inverse_ideal(const PositionPoset& from, const Ideal& I,
                    const PositionPoset& to);

/// Projection of an ideal of W_{Delta,eta} to W_{theta,eta} (image of each
/// member's coset). Only meaningful when theta contains minimal_anosov_type.
Ideal project_ideal(const PositionPoset& from, const Ideal& I,
                    const PositionPoset& to);

/// Sign label of a coset in W/W_{n} for type C rank n: entry k is the sign
/// of w^{-1}(k). For rank 2 this is the (+,-) notation for Lag(C^4).
std::string sign_label(const WeylElement& w);

}  // namespace flagdod
