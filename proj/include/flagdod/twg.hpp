#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagdod/flags.hpp"
#include "flagdod/sl2reps.hpp"

namespace flagdod {

enum class CircleGroup { SO2, PSO2 };

/// Weight of the tangent plane of the hyperbolic plane at the origin:
/// 2 for SO(2), 1 for PSO(2).
int hyperbolic_weight(CircleGroup g);
std::string to_string(CircleGroup g);
/// PSO(2) when all weights share a parity, SO(2) otherwise.
CircleGroup natural_group(const std::vector<int>& weights);
/// Throws when PSO(2) is requested for mixed-parity weights.
void check_group(const std::vector<int>& weights, CircleGroup g);

struct DifferenceMatrix {
    std::vector<std::string> labels;  // basis vectors in flag order
    // entries[i][j] is set exactly when (i+1, j+1) lies in the chart index set
    std::vector<std::vector<std::optional<int>>> entries;

    /// Present entries, row by row.
    std::vector<int> values() const;
};

/// Chart index set of a signature: 1-based (i, j) with j <= d_r < i.
std::vector<std::pair<int, int>> chart_index_set(const Signature& sig);

/// Entry (i, j) is omega_i - omega_j, halved for PSO(2). `order` lists
/// basis indices in flag order.
DifferenceMatrix difference_matrix(const WeightedBasis& basis,
                                   const std::vector<std::size_t>& order,
                                   const Signature& sig, CircleGroup g);

/// Invariant form pairing weight w with -w. Even parts carry their own
/// form, odd parts are paired with the next part of the same size.
SymplecticForm weight_pairing_form(const WeightedBasis& basis, const Partition& p);

/// Tangent weights of the Lagrangian Grassmannian at the Lagrangian spanned
/// by the first half of `order`, from the linearised isotropy equations on
/// the affine chart. Sorted descending.
std::vector<int> tangent_weights_lagrangian(const WeightedBasis& basis,
                                            const std::vector<std::size_t>& order,
                                            const SymplecticForm& omega, CircleGroup g);

/// Sign of the product; throws on a zero weight.
int sign_of_fixed_point(const std::vector<int>& weights);

struct FixedPoint {
    std::string id;
    std::vector<std::size_t> order;  // canonical flag order
};

struct FixedSurface {
    std::string id;
    int weight = 0;                           // weight of the pencil
    std::pair<std::size_t, std::size_t> pencil;  // the two equal-weight basis vectors
    std::vector<std::size_t> order;           // one member of the family
};

struct FixedLocus {
    std::vector<FixedPoint> isolated;
    std::vector<FixedSurface> surfaces;

    const FixedPoint* find(const std::vector<std::size_t>& order,
                           const Signature& sig) const;
};

/// Invariant flags of the given signature. A weight plane split between two
/// blocks gives a fixed projective line; larger fixed components are
/// rejected. With omega set, only isotropic flags are kept.
FixedLocus fixed_flags(const WeightedBasis& basis, const Signature& sig, CircleGroup g,
                       const std::optional<SymplecticForm>& omega);

/// Flag order with each block sorted by basis index.
std::vector<std::size_t> canonical_order(const std::vector<std::size_t>& order,
                                         const Signature& sig);

struct SphereTarget {
    std::vector<std::pair<int, int>> entries;  // chart positions (1-based) swapped
    std::vector<std::size_t> target;           // canonical order of the other end
    int weight = 0;                            // absolute weight, at least 2
};

/// Invariant spheres leaving an isolated fixed point along chart directions
/// of absolute weight at least 2. Without omega each direction (i, j) swaps
/// v_i and v_j. With omega (Lagrangian case) a weight class cut to one
/// dimension is realised by the unique set of its swaps that lands on an
/// isotropic flag.
std::vector<SphereTarget> exceptional_sphere_targets(
    const WeightedBasis& basis, const std::vector<std::size_t>& order,
    const Signature& sig, CircleGroup g, const std::optional<SymplecticForm>& omega);

struct RoundVertex {
    std::string id;
    int sign = 1;
    bool operator==(const RoundVertex&) const = default;
};

struct SquareVertex {
    std::string id;
    int euler = 0;
    bool operator==(const SquareVertex&) const = default;
};

struct Edge {
    std::string a, b;
    int weight = 2;
    bool operator==(const Edge&) const = default;
};

struct WeightGraph {
    std::vector<RoundVertex> rounds;
    std::vector<SquareVertex> squares;
    std::vector<Edge> edges;

    /// Unique ids, edges between round vertices of weight >= 2, at most two
    /// edges per vertex.
    void validate() const;
    const RoundVertex* find_round(const std::string& id) const;
    std::vector<int> incident_weights(const std::string& id) const;  // sorted
};

struct TangentData {
    std::map<std::string, std::vector<int>> weights;  // ambient weights per round vertex
    std::map<std::string, int> surface_euler;         // fiber Euler label per square vertex
};

/// Drops one weight of absolute value equal to the hyperbolic weight,
/// preferring +h; when -h is dropped the first remaining weight is negated
/// so the sign of the product is kept.
std::vector<int> fiber_tangent_weights(const std::vector<int>& ambient, CircleGroup g);

/// Fiber graph: same round vertices and signs; under SO(2) edges of the
/// hyperbolic weight are deleted, under PSO(2) all edges survive; square
/// vertices take their labels from tangent.surface_euler.
WeightGraph ambient_to_fiber_graph(const WeightGraph& ambient, CircleGroup g,
                                   const TangentData& tangent);

/// |e| for a fixed projective line C in a variety with c1 = k * H:
/// |k * (H . C) - 2|.
int fixed_surface_euler(int ambient_c1_coeff, int surface_degree, int hyperplane_pairing);

struct HirzebruchParams {
    int q = 0, a = 1, b = 0;
    std::string name() const;  // "Hir(2;-1,2)"
    std::string diffeotype() const;
    bool operator==(const HirzebruchParams&) const = default;
};

/// Vertices p1..p4 with edges p1p2 |a|, p1p3 |b|, p2p4 |b|, p3p4 |a+qb|
/// (weight-1 edges dropped); (a, b) = (1, 0) gives squares S13 = q and
/// S24 = -q.
WeightGraph hirzebruch_graph(int q, int a, int b);

/// Glue at round vertices of opposite sign with equal incident weights.
/// Ids of the result are prefixed "a:" and "b:".
WeightGraph connected_sum(const WeightGraph& g1, const std::string& v1,
                          const WeightGraph& g2, const std::string& v2);

struct CanonicalForm {
    int plus = 0, minus = 0;
    std::vector<int> adjacency;  // minimal over sign-preserving relabelings
    std::vector<int> squares;    // sorted Euler labels
    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const WeightGraph& g);
bool graphs_isomorphic(const WeightGraph& g1, const WeightGraph& g2);

/// Catalogue searched by classify_fiber, in search order: q ascending, then
/// (a, b) = (1, 0), then b > 0 ascending, |a| ascending with a > 0 first.
/// (a, b) and (-a, -b) give the same graph, so only b > 0 is listed; for
/// q = 0 the factors can be swapped, so |a| <= |b| there.
std::vector<HirzebruchParams> hirzebruch_catalogue(int max_q, int max_a, int max_b);

struct Classification {
    bool matched = false;
    std::string model;       // "Hir(2;-1,2)" or "Hir(0;1,2)#Hir(0;1,2)"
    std::string diffeotype;  // "S²×S²", "ℂP²#ℂP̄²", "(S²×S²)#(S²×S²)"
};

Classification classify_fiber(const WeightGraph& g);

/// Necessary condition sigma + chi = 0 (mod 4) for an almost complex
/// structure on a closed 4-manifold; false means none exists.
bool check_almost_complex_obstruction(int signature_of_form, int euler_char);

enum class FlagKind { Full, Projective, Lagrangian };
std::string to_string(FlagKind k);

struct CaseSpec {
    Partition partition;
    FlagKind flag = FlagKind::Full;
    std::optional<CircleGroup> group;  // natural group when unset
};

struct CaseResult {
    CaseSpec spec;
    CircleGroup group = CircleGroup::SO2;
    WeightedBasis basis;
    Signature signature;
    std::optional<SymplecticForm> omega;
    FixedLocus locus;
    std::map<std::string, std::vector<int>> ambient_weights;
    std::map<std::string, std::vector<int>> fiber_weights;
    WeightGraph ambient;
    WeightGraph fiber;
    Classification classification;
    int fixed_euler = 0;     // isolated points + 2 per fixed sphere
    int schubert_cells = 0;  // |W/W_eta|
};

CaseResult compute_case(const CaseSpec& spec);

}  // namespace flagdod
