#pragma once

#include <string>
#include <vector>

#include "flagdod/sl2reps.hpp"

namespace flagdod {

enum class GroupFamily { SL, SO, Sp };

/// Signature entry. For SO(2p) the two families of maximal isotropic
/// subspaces are the tags (p, +1) and (p, -1); together they stand for the
/// isotropic (p-1)-planes.
struct SigIndex {
    int k = 1;
    int half = 0;
    bool operator==(const SigIndex&) const = default;
    auto operator<=>(const SigIndex&) const = default;
};

/// SL(n) and SO(n) act on C^n; Sp(2n) on C^{2n} with n stored here.
struct FlagVarietyDescriptor {
    GroupFamily family = GroupFamily::SL;
    int n = 2;
    std::vector<SigIndex> indices;  // sorted

    void validate() const;
    int rank() const;
    std::string group_name() const;    // "SL4", "Sp4", "SO5"
    std::string variety_name() const;  // "ℂP³", "Lag(ℂ⁴)", "IsoFlag₃₊(ℂ⁶)"
    bool operator==(const FlagVarietyDescriptor&) const = default;
};

/// Complex dimension: the top isotropic Grassmannian plus the SL flag of
/// the remaining indices inside its top subspace.
int flag_dim(const FlagVarietyDescriptor& d);

/// Every signature tag set of a simple classical group (SL, Sp, SO) of
/// rank 2..max_rank.
std::vector<FlagVarietyDescriptor> all_flag_varieties(int max_rank);

/// Flag varieties of complex dimension exactly 3 among groups of rank
/// 2..max_rank.
std::vector<FlagVarietyDescriptor> enumerate_3dim_flag_varieties(int max_rank);

struct CaseTableRow {
    std::string group;     // "SL3", "SL4/Sp4", "Sp4"
    std::string variety;   // "Flag(ℂ³)", "ℂP³", "Lag(ℂ⁴)"
    std::vector<Partition> partitions;
};

/// Representations iota (partitions) whose Anosov type contains the
/// minimal Anosov type of the unique balanced ideal, per 3-dimensional flag
/// variety of SL3, SL4 and Sp4; Sp rows also need an invariant symplectic
/// form. Identical rows are merged. Gr3(C^4) is dual to CP^3 and the SO
/// groups are covered by SL4 and Sp4, so they are not rows.
std::vector<CaseTableRow> fullcases_table();

}  // namespace flagdod
