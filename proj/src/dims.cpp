#include "flagdod/dims.hpp"

#include <algorithm>
#include <map>

#include "flagdod/error.hpp"
#include "flagdod/ideals.hpp"

namespace flagdod {

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

// Dimension of the SL flag variety of the given dimensions inside C^N.
int sl_flag_dim(std::vector<int> ks, int N) {
    ks.push_back(N);
    int prev = 0, sq = 0;
    for (int k : ks) {
        sq += (k - prev) * (k - prev);
        prev = k;
    }
    return (N * N - sq) / 2;
}

std::string sup(int x) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(x)) s += digits[c - '0'];
    return s;
}

std::string sub(int x) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char c : std::to_string(x)) s += digits[c - '0'];
    return s;
}

std::string sub_list(const std::vector<SigIndex>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += sub(idx[i].k);
        if (idx[i].half > 0) s += "₊";
        if (idx[i].half < 0) s += "₋";
    }
    return s;
}

std::vector<SigIndex> tags(GroupFamily f, int n) {
    std::vector<SigIndex> out;
    if (f == GroupFamily::SL) {
        for (int k = 1; k < n; ++k) out.push_back({k, 0});
    } else if (f == GroupFamily::Sp) {
        for (int k = 1; k <= n; ++k) out.push_back({k, 0});
    } else if (n % 2 == 1) {
        for (int k = 1; k <= n / 2; ++k) out.push_back({k, 0});
    } else {
        const int p = n / 2;
        for (int k = 1; k <= p - 2; ++k) out.push_back({k, 0});
        out.push_back({p, 1});
        out.push_back({p, -1});
    }
    return out;
}

}  // namespace

void FlagVarietyDescriptor::validate() const {
    switch (family) {
        case GroupFamily::SL: require(n >= 2, "SL(n) needs n >= 2"); break;
        case GroupFamily::Sp: require(n >= 1, "Sp(2n) needs n >= 1"); break;
        case GroupFamily::SO: require(n >= 3, "SO(n) needs n >= 3"); break;
    }
    require(!indices.empty(), "flag variety needs at least one index");
    const auto legal = tags(family, n);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        require(std::find(legal.begin(), legal.end(), indices[i]) != legal.end(),
                "signature index " + std::to_string(indices[i].k) + " out of range for " +
                    group_name());
        require(i == 0 || indices[i - 1] < indices[i], "signature indices must be sorted");
    }
}

int FlagVarietyDescriptor::rank() const {
    return family == GroupFamily::SL ? n - 1 : family == GroupFamily::Sp ? n : n / 2;
}

std::string FlagVarietyDescriptor::group_name() const {
    switch (family) {
        case GroupFamily::SL: return "SL" + std::to_string(n);
        case GroupFamily::Sp: return "Sp" + std::to_string(2 * n);
        case GroupFamily::SO: return "SO" + std::to_string(n);
    }
    return "";
}

std::string FlagVarietyDescriptor::variety_name() const {
    const bool single = indices.size() == 1;
    const int k = indices.front().k;
    switch (family) {
        case GroupFamily::SL:
            if (static_cast<int>(indices.size()) == n - 1) return "Flag(ℂ" + sup(n) + ")";
            if (single && k == 1) return "ℂP" + sup(n - 1);
            if (single) return "Gr" + sub(k) + "(ℂ" + sup(n) + ")";
            return "Flag" + sub_list(indices) + "(ℂ" + sup(n) + ")";
        case GroupFamily::Sp:
            if (single && k == 1) return "ℂP" + sup(2 * n - 1);
            if (single && k == n) return "Lag(ℂ" + sup(2 * n) + ")";
            return "IsoFlag" + sub_list(indices) + "(ℂ" + sup(2 * n) + ")";
        case GroupFamily::SO:
            if (single && k == 1 && indices.front().half == 0) return "Quad" + sub(n - 2);
            return "IsoFlag" + sub_list(indices) + "(ℂ" + sup(n) + ")";
    }
    return "";
}

int flag_dim(const FlagVarietyDescriptor& d) {
    d.validate();
    std::vector<int> lower;
    int top = 0, halves = 0;
    for (const auto& idx : d.indices) {
        if (idx.half != 0) {
            ++halves;
            continue;
        }
        lower.push_back(idx.k);
    }
    if (halves == 0) {
        top = lower.back();
        lower.pop_back();
    } else {
        // one half: a maximal isotropic p-plane; both: an isotropic (p-1)-plane
        top = halves == 1 ? d.n / 2 : d.n / 2 - 1;
    }
    int grass = 0;
    switch (d.family) {
        case GroupFamily::SL: grass = top * (d.n - top); break;
        case GroupFamily::Sp: grass = top * (2 * d.n - top) - choose2(top); break;
        case GroupFamily::SO: grass = top * (d.n - top) - choose2(top + 1); break;
    }
    return grass + sl_flag_dim(lower, top);
}

std::vector<FlagVarietyDescriptor> all_flag_varieties(int max_rank) {
    std::vector<FlagVarietyDescriptor> out;
    auto add_group = [&](GroupFamily f, int n) {
        const auto t = tags(f, n);
        for (std::size_t mask = 1; mask < (std::size_t{1} << t.size()); ++mask) {
            FlagVarietyDescriptor d{f, n, {}};
            for (std::size_t i = 0; i < t.size(); ++i)
                if (mask >> i & 1) d.indices.push_back(t[i]);
            std::sort(d.indices.begin(), d.indices.end());
            out.push_back(d);
        }
    };
    for (int n = 3; n - 1 <= max_rank; ++n) add_group(GroupFamily::SL, n);
    for (int n = 2; n <= max_rank; ++n) add_group(GroupFamily::Sp, n);
    for (int n = 4; n / 2 <= max_rank; ++n) add_group(GroupFamily::SO, n);
    return out;
}

std::vector<FlagVarietyDescriptor> enumerate_3dim_flag_varieties(int max_rank) {
    require(max_rank >= 2, "the census starts at rank 2");
    std::vector<FlagVarietyDescriptor> out;
    for (const auto& d : all_flag_varieties(max_rank))
        if (flag_dim(d) == 3) out.push_back(d);
    return out;
}

std::vector<CaseTableRow> fullcases_table() {
    std::vector<CaseTableRow> rows;
    for (const auto& d : enumerate_3dim_flag_varieties(3)) {
        if (d.family == GroupFamily::SO) continue;  // covered by SL4 and Sp4
        if (d.family == GroupFamily::SL && d.indices.size() == 1 && d.indices[0].k == d.n - 1 &&
            d.n > 2)
            continue;  // Gr_{n-1} is dual to CP^{n-1}

        const bool sp = d.family == GroupFamily::Sp;
        RootSystemSpec spec{sp ? Family::TypeC : Family::TypeA, d.rank()};
        RootSubset eta;
        for (const auto& idx : d.indices) eta.push_back(idx.k);
        PositionPoset P = double_cosets(spec, full_subset(spec), eta);
        auto ideals = enumerate_balanced_ideals(P);
        if (ideals.size() != 1) continue;
        const RootSubset need = minimal_anosov_type(P, ideals.front());

        CaseTableRow row{d.group_name(), d.variety_name(), {}};
        const int total = sp ? 2 * d.n : d.n;
        for (const auto& p : all_partitions(total)) {
            if (sp && !admits_symplectic_form(p)) continue;
            RootSubset theta = sp ? anosov_type_symplectic(p) : anosov_type(p);
            if (std::includes(theta.begin(), theta.end(), need.begin(), need.end()))
                row.partitions.push_back(p);
        }
        if (row.partitions.empty()) continue;

        auto same = std::find_if(rows.begin(), rows.end(), [&](const CaseTableRow& r) {
            return r.variety == row.variety && r.partitions == row.partitions;
        });
        if (same != rows.end())
            same->group += "/" + row.group;
        else
            rows.push_back(row);
    }
    return rows;
}

}  // namespace flagdod
