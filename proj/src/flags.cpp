#include "flagdod/flags.hpp"

#include <cstdlib>

#include "flagdod/error.hpp"

namespace flagdod {

void Signature::validate() const {
    require(ambient >= 1, "signature: ambient dimension must be positive");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        require(dims[i] >= 1 && dims[i] < ambient, "signature: dimension out of range");
        require(i == 0 || dims[i - 1] < dims[i], "signature must be strictly increasing");
    }
}

bool Signature::is_full() const {
    if (static_cast<int>(dims.size()) != ambient - 1) return false;
    for (int k = 1; k < ambient; ++k)
        if (dims[k - 1] != k) return false;
    return true;
}

Signature full_signature(int n) {
    Signature s{{}, n};
    for (int k = 1; k < n; ++k) s.dims.push_back(k);
    return s;
}

Signature signature_of_type(const RootSystemSpec& spec, const RootSubset& theta) {
    RootSubset t = normalize_subset(spec, theta);
    require(!t.empty(), "flag type must be nonempty");
    Signature s{std::vector<int>(t.begin(), t.end()), spec.ambient_dim()};
    s.validate();
    return s;
}

ExactFlag::ExactFlag(Signature sig, ExactMatrix basis)
    : sig_(std::move(sig)), basis_(std::move(basis)) {
    sig_.validate();
    require(basis_.rows() == static_cast<std::size_t>(sig_.ambient) &&
                basis_.cols() == basis_.rows(),
            "flag basis must be an n x n matrix");
    require(!basis_.determinant().is_zero(), "flag basis columns are dependent");
}

ExactFlag ExactFlag::from_top_columns(Signature sig, const ExactMatrix& cols) {
    sig.validate();
    const std::size_t n = static_cast<std::size_t>(sig.ambient);
    require(cols.rows() == n, "flag columns have the wrong ambient dimension");
    require(!sig.dims.empty() && cols.cols() == static_cast<std::size_t>(sig.dims.back()),
            "flag needs exactly d_l spanning columns");
    require(cols.rank() == cols.cols(), "flag columns are dependent");
    ExactMatrix basis = cols;
    for (std::size_t i = 0; i < n && basis.cols() < n; ++i) {
        ExactMatrix e(n, 1);
        e(i, 0) = 1;
        ExactMatrix trial = basis.hconcat(e);
        if (trial.rank() == trial.cols()) basis = trial;
    }
    return ExactFlag(std::move(sig), std::move(basis));
}

ExactMatrix ExactFlag::subspace(int dim) const {
    require(dim >= 0 && dim <= ambient(), "subspace dimension out of range");
    return basis_.leading_columns(static_cast<std::size_t>(dim));
}

SymplecticForm::SymplecticForm(ExactMatrix g) : gram(std::move(g)) {
    require(gram.rows() == gram.cols() && gram.rows() % 2 == 0,
            "symplectic Gram matrix must be square of even size");
    for (std::size_t r = 0; r < gram.rows(); ++r)
        for (std::size_t c = 0; c < gram.cols(); ++c)
            require(gram(r, c) == -gram(c, r), "Gram matrix is not antisymmetric");
    require(!gram.determinant().is_zero(), "symplectic form is degenerate");
}

GQ SymplecticForm::pair(const ExactMatrix& u, const ExactMatrix& v) const {
    return (u.transpose() * gram * v)(0, 0);
}

SymplecticForm standard_symplectic_form(int n) {
    const std::size_t N = 2 * static_cast<std::size_t>(n);
    ExactMatrix g(N, N);
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        g(j, N - 1 - j) = 1;
        g(N - 1 - j, j) = -1;
    }
    return SymplecticForm(g);
}

std::size_t intersection_dim(const ExactMatrix& U, const ExactMatrix& V) {
    require(U.rows() == V.rows(), "intersection_dim: ambient mismatch");
    return U.rank() + V.rank() - U.hconcat(V).rank();
}

std::vector<std::vector<int>> dimension_table(const std::vector<ExactMatrix>& F,
                                              const std::vector<ExactMatrix>& H) {
    const std::size_t n = F.size();
    require(H.size() == n, "dimension_table: flags of different length");
    std::vector<std::vector<int>> D(n, std::vector<int>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
            D[j][k] = static_cast<int>(intersection_dim(F[k - 1], H[j]));
    return D;
}

namespace {

std::vector<ExactMatrix> chain_of(const ExactFlag& F) {
    std::vector<ExactMatrix> out;
    for (int k = 1; k <= F.ambient(); ++k) out.push_back(F.subspace(k));
    return out;
}

// Permutation (1-based images) read off the jumps of the D table.
std::vector<int> permutation_from_chains(const std::vector<ExactMatrix>& F,
                                         const std::vector<ExactMatrix>& H) {
    const auto D = dimension_table(F, H);
    const std::size_t n = F.size();
    std::vector<int> sigma(n, 0);
    std::vector<bool> used(n + 1, false);
    for (std::size_t j = 0; j < n; ++j) {
        int fresh = 0, count = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            int jump = D[j][k] - D[j][k - 1];
            require(jump == 0 || jump == 1, "inconsistent dimension table");
            if (jump == 1 && !used[k]) {
                fresh = static_cast<int>(k);
                ++count;
            }
        }
        require(count == 1, "dimension table does not define a permutation");
        sigma[j] = fresh;
        used[fresh] = true;
    }
    return sigma;
}

}  // namespace

WeylElement relative_position_full(const ExactFlag& F, const ExactFlag& H) {
    require(F.signature().is_full() && H.signature().is_full(),
            "relative_position_full needs full flags");
    require(F.ambient() == H.ambient(), "flags live in different spaces");
    WeylElement w{Family::TypeA, permutation_from_chains(chain_of(F), chain_of(H))};
    w.validate();
    return w;
}

bool is_isotropic(const ExactMatrix& U, const SymplecticForm& omega) {
    require(U.rows() == static_cast<std::size_t>(omega.dim()),
            "is_isotropic: dimension mismatch");
    return (U.transpose() * omega.gram * U).is_zero();
}

bool is_isotropic(const ExactFlag& F, const SymplecticForm& omega) {
    require(F.ambient() == omega.dim(), "is_isotropic: dimension mismatch");
    return is_isotropic(F.subspace(F.signature().dims.back()), omega);
}

ExactMatrix omega_perp(const ExactMatrix& U, const SymplecticForm& omega) {
    require(U.rows() == static_cast<std::size_t>(omega.dim()),
            "omega_perp: dimension mismatch");
    if (U.cols() == 0) return ExactMatrix::identity(U.rows());
    return (U.transpose() * omega.gram).nullspace();
}

std::vector<ExactMatrix> extended_isotropic_chain(const ExactFlag& F,
                                                  const SymplecticForm& omega) {
    const int N = F.ambient();
    require(N == omega.dim(), "flag and form live in different spaces");
    const int n = N / 2;
    const auto& d = F.signature().dims;
    require(static_cast<int>(d.size()) == n && d.back() == n && F.signature().dims[0] == 1,
            "symplectic position needs isotropic flags of signature 1..n");
    require(is_isotropic(F, omega), "flag is not isotropic");
    std::vector<ExactMatrix> chain;
    for (int k = 1; k <= n; ++k) chain.push_back(F.subspace(k));
    for (int p = n + 1; p <= N; ++p) chain.push_back(omega_perp(F.subspace(N - p), omega));
    return chain;
}

WeylElement relative_position_symplectic(const ExactFlag& F, const ExactFlag& H,
                                         const SymplecticForm& omega) {
    const int N = omega.dim(), n = N / 2;
    auto pi = permutation_from_chains(extended_isotropic_chain(F, omega),
                                      extended_isotropic_chain(H, omega));
    auto label = [&](int p) { return p <= n ? p : -(N - p + 1); };
    WeylElement w{Family::TypeC, std::vector<int>(n)};
    for (int j = 1; j <= n; ++j) {
        require(pi[N - j] == N + 1 - pi[j - 1],
                "positions of j and -j are not mirrored");
        w.images[j - 1] = label(pi[j - 1]);
    }
    w.validate();
    return w;
}

ExactFlag lift_to_full(const ExactFlag& F, const std::optional<SymplecticForm>& omega) {
    const int N = F.ambient();
    if (!omega) return ExactFlag(full_signature(N), F.basis());

    require(omega->dim() == N, "flag and form live in different spaces");
    require(is_isotropic(F, *omega), "flag is not isotropic");
    const int n = N / 2;
    ExactMatrix cols = F.subspace(F.signature().dims.back());
    while (static_cast<int>(cols.cols()) < n) {
        ExactMatrix perp = omega_perp(cols, *omega);
        bool grown = false;
        for (std::size_t c = 0; c < perp.cols() && !grown; ++c) {
            ExactMatrix trial = cols.hconcat(perp.column(c));
            if (trial.rank() == trial.cols()) {
                cols = trial;
                grown = true;
            }
        }
        require(grown, "cannot extend isotropic subspace");
    }
    Signature sig{{}, N};
    for (int k = 1; k <= n; ++k) sig.dims.push_back(k);
    return ExactFlag::from_top_columns(sig, cols);
}

DoubleCoset relative_position_partial(const RootSystemSpec& spec, const ExactFlag& F,
                                      const RootSubset& theta, const ExactFlag& H,
                                      const RootSubset& eta,
                                      const std::optional<SymplecticForm>& omega) {
    require(F.signature() == signature_of_type(spec, theta), "F does not have type theta");
    require(H.signature() == signature_of_type(spec, eta), "H does not have type eta");
    WeylElement w;
    if (spec.family == Family::TypeA) {
        w = relative_position_full(lift_to_full(F, std::nullopt), lift_to_full(H, std::nullopt));
    } else {
        require(omega.has_value(), "type C positions need a symplectic form");
        w = relative_position_symplectic(lift_to_full(F, omega), lift_to_full(H, omega), *omega);
    }
    return double_coset_of(spec, theta, eta, w);
}

ExactMatrix permutation_matrix(const WeylElement& w) {
    require(w.family == Family::TypeA, "permutation_matrix needs a type A element");
    const std::size_t n = static_cast<std::size_t>(w.degree());
    ExactMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(w.images[j] - 1, j) = 1;
    return m;
}

ExactMatrix signed_permutation_matrix(const WeylElement& w) {
    require(w.family == Family::TypeC, "signed_permutation_matrix needs a type C element");
    const int n = w.degree(), N = 2 * n;
    auto index = [&](int label) { return label > 0 ? label - 1 : N + label; };
    ExactMatrix m(N, N);
    for (int j = 1; j <= n; ++j) {
        int v = w.images[j - 1];
        m(index(v), index(j)) = 1;
        m(index(-v), index(-j)) = v > 0 ? 1 : -1;
    }
    return m;
}

}  // namespace flagdod
