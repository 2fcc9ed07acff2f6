#pragma once

#include <string>
#include <vector>

#include "flagdod/weyl.hpp"

namespace flagdod {

/// A partition of n, parts sorted non-increasing.
struct Partition {
    std::vector<int> parts;

    int total() const;
    void validate() const;
    bool operator==(const Partition&) const = default;

    /// Sorts the parts; rejects empty input and non-positive parts.
    static Partition of(std::vector<int> parts);
    /// "3,2,1" or "(3,2,1)".
    static Partition parse(const std::string& text);
    std::string to_string() const;  // "(3,2,1)"
};

/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> all_partitions(int n);

/// d-1, d-3, ..., 1-d.
std::vector<int> irreducible_weights(int d);
/// All weights of the partition, descending.
std::vector<int> partition_weights(const Partition& p);

/// {j : w_j != w_{j+1}} on the descending weights (type A, rank n-1).
RootSubset anosov_type(const Partition& p);
/// Type C version for a partition admitting a symplectic form: on the
/// first half w_1 >= ... >= w_n of the weights, alpha_j = w_j - w_{j+1}
/// for j < n and alpha_n = 2 w_n.
RootSubset anosov_type_symplectic(const Partition& p);

/// Every odd part occurs an even number of times. Throws for odd totals.
bool admits_symplectic_form(const Partition& p);

struct WeightedBasis {
    std::vector<std::string> labels;
    std::vector<int> weights;
    std::vector<int> part_of;  // index of the part each vector comes from

    std::size_t size() const { return labels.size(); }
    std::size_t index_of(const std::string& label) const;
};

/// Weight vectors part by part, descending weight inside each part.
/// Labels: a single nontrivial part uses f_w ("f2", "f0", "f-2"); several
/// use e, f, g, ... in part order. One trivial part is "f0" (or "z" when
/// that name is taken), two are X2 and Y2, more are z1, z2, ...
WeightedBasis so2_weight_basis(const Partition& p);

/// Log singular values, descending. Floating point, unlike everything else
/// in the library. Throws on singular input.
std::vector<double> cartan_projection(const std::vector<std::vector<double>>& m);

}  // namespace flagdod
