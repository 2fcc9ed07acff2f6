#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagdod/exact.hpp"
#include "flagdod/weyl.hpp"

namespace flagdod {

struct Signature {
    std::vector<int> dims;  // strictly increasing, last < ambient
    int ambient = 0;

    void validate() const;
    bool is_full() const;
    bool operator==(const Signature&) const = default;
};

Signature full_signature(int n);

/// Signature of the flag type theta. Type A: subspace dimensions are the
/// members of theta inside C^{rank+1}; type C: isotropic dimensions inside
/// C^{2 rank}.
Signature signature_of_type(const RootSystemSpec& spec, const RootSubset& theta);

/// A flag given by an invertible basis whose first d_j columns span F^{d_j}.
class ExactFlag {
public:
    ExactFlag(Signature sig, ExactMatrix basis);
    /// Spanning vectors for the top subspace (dependent columns rejected),
    /// completed to a basis by greedy pivoting on standard basis vectors.
    static ExactFlag from_top_columns(Signature sig, const ExactMatrix& cols);

    const Signature& signature() const { return sig_; }
    const ExactMatrix& basis() const { return basis_; }
    int ambient() const { return sig_.ambient; }
    ExactMatrix subspace(int dim) const;  // first dim columns

private:
    Signature sig_;
    ExactMatrix basis_;
};

struct SymplecticForm {
    ExactMatrix gram;
    explicit SymplecticForm(ExactMatrix g);
    int dim() const { return static_cast<int>(gram.rows()); }
    GQ pair(const ExactMatrix& u, const ExactMatrix& v) const;  // column vectors
};

/// The form with omega(e_j, e_{-k}) = delta_{jk}, basis order
/// e_1..e_n, e_{-n}..e_{-1}.
SymplecticForm standard_symplectic_form(int n);

std::size_t intersection_dim(const ExactMatrix& U, const ExactMatrix& V);

/// The permutation sigma with K_j = {sigma(1..j)}, where K_j records where
/// k -> dim(F^k cap H^j) jumps.
WeylElement relative_position_full(const ExactFlag& F, const ExactFlag& H);

/// The D_j(k) table, D[j-1][k] = dim(F^k cap H^j) for k = 0..n.
std::vector<std::vector<int>> dimension_table(const std::vector<ExactMatrix>& F,
                                              const std::vector<ExactMatrix>& H);

bool is_isotropic(const ExactFlag& F, const SymplecticForm& omega);
bool is_isotropic(const ExactMatrix& U, const SymplecticForm& omega);
ExactMatrix omega_perp(const ExactMatrix& U, const SymplecticForm& omega);

/// Chain F^1..F^{2n} with F^{2n+1-r} = (F^{r-1})^perp.
std::vector<ExactMatrix> extended_isotropic_chain(const ExactFlag& F,
                                                  const SymplecticForm& omega);

WeylElement relative_position_symplectic(const ExactFlag& F, const ExactFlag& H,
                                         const SymplecticForm& omega);

/// Lift to a full flag (type A) or full isotropic flag (type C, omega
/// required) by greedy completion.
ExactFlag lift_to_full(const ExactFlag& F, const std::optional<SymplecticForm>& omega);

DoubleCoset relative_position_partial(const RootSystemSpec& spec, const ExactFlag& F,
                                      const RootSubset& theta, const ExactFlag& H,
                                      const RootSubset& eta,
                                      const std::optional<SymplecticForm>& omega);

/// Matrix of the signed permutation acting on (C^{2n}, standard form):
/// e_j -> e_{w(j)} with signs chosen so the standard form is preserved.
ExactMatrix signed_permutation_matrix(const WeylElement& w);
/// Column permutation matrix e_j -> e_{w(j)}.
ExactMatrix permutation_matrix(const WeylElement& w);

}  // namespace flagdod
