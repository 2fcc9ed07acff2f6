#include "flagdod/sl2reps.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "flagdod/error.hpp"

namespace flagdod {

int Partition::total() const {
    int s = 0;
    for (int d : parts) s += d;
    return s;
}

void Partition::validate() const {
    require(!parts.empty(), "partition has no parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "partition parts must be positive");
        require(i == 0 || parts[i - 1] >= parts[i], "partition parts must be non-increasing");
    }
}

Partition Partition::of(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    Partition p{std::move(parts)};
    p.validate();
    return p;
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
    std::vector<int> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                "malformed partition '" + text + "'");
        require(item.size() < 6, "partition part too large");
        parts.push_back(std::stoi(item));
    }
    return of(parts);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

std::vector<Partition> all_partitions(int n) {
    require(n >= 1, "partitions need a positive total");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int d = std::min(left, max_part); d >= 1; --d) {
            cur.push_back(d);
            self(self, left - d, d);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<int> irreducible_weights(int d) {
    require(d >= 1, "representation dimension must be positive");
    std::vector<int> w;
    for (int k = d - 1; k >= 1 - d; k -= 2) w.push_back(k);
    return w;
}

std::vector<int> partition_weights(const Partition& p) {
    p.validate();
    std::vector<int> w;
    for (int d : p.parts) {
        auto part = irreducible_weights(d);
        w.insert(w.end(), part.begin(), part.end());
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

RootSubset anosov_type(const Partition& p) {
    auto w = partition_weights(p);
    RootSubset out;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] != w[j + 1]) out.push_back(static_cast<int>(j) + 1);
    return out;
}

bool admits_symplectic_form(const Partition& p) {
    p.validate();
    require(p.total() % 2 == 0, "symplectic forms need an even total");
    std::map<int, int> mult;
    for (int d : p.parts) ++mult[d];
    for (auto [d, m] : mult)
        if (d % 2 == 1 && m % 2 == 1) return false;
    return true;
}

RootSubset anosov_type_symplectic(const Partition& p) {
    require(admits_symplectic_form(p), "partition admits no invariant symplectic form");
    auto w = partition_weights(p);
    const std::size_t n = w.size() / 2;
    RootSubset out;
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (w[j] != w[j + 1]) out.push_back(static_cast<int>(j) + 1);
    if (w[n - 1] != 0) out.push_back(static_cast<int>(n));
    return out;
}

std::size_t WeightedBasis::index_of(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    require(it != labels.end(), "unknown basis vector '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

WeightedBasis so2_weight_basis(const Partition& p) {
    p.validate();
    std::vector<std::size_t> nontrivial, trivial;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        (p.parts[i] > 1 ? nontrivial : trivial).push_back(i);

    WeightedBasis b;
    std::map<std::size_t, char> letter;
    if (nontrivial.size() == 1) {
        letter[nontrivial[0]] = 'f';
    } else {
        for (std::size_t k = 0; k < nontrivial.size(); ++k)
            letter[nontrivial[k]] = static_cast<char>('e' + k);
    }
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] == 1) continue;
        for (int w : irreducible_weights(p.parts[i])) {
            b.labels.push_back(std::string(1, letter[i]) + std::to_string(w));
            b.weights.push_back(w);
            b.part_of.push_back(static_cast<int>(i));
        }
    }
    auto taken = [&](const std::string& s) {
        return std::find(b.labels.begin(), b.labels.end(), s) != b.labels.end();
    };
    std::vector<std::string> names;
    if (trivial.size() == 1) {
        names.push_back(taken("f0") ? "z" : "f0");
    } else if (trivial.size() == 2) {
        names = {"X2", "Y2"};
    } else {
        for (std::size_t k = 0; k < trivial.size(); ++k) names.push_back("z" + std::to_string(k + 1));
    }
    for (std::size_t k = 0; k < trivial.size(); ++k) {
        b.labels.push_back(names[k]);
        b.weights.push_back(0);
        b.part_of.push_back(static_cast<int>(trivial[k]));
    }
    return b;
}

std::vector<double> cartan_projection(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    require(n > 0, "empty matrix");
    Eigen::MatrixXd a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        require(m[r].size() == n, "cartan_projection needs a square matrix");
        for (std::size_t c = 0; c < n; ++c) {
            require(std::isfinite(m[r][c]), "non-finite matrix entry");
            a(r, c) = m[r][c];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    require(s(n - 1) > 0 && s(n - 1) > s(0) * 1e-300, "matrix is singular");
    Eigen::MatrixXd back = svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
    require((back - a).norm() <= 1e-9 * std::max(1.0, a.norm()),
            "singular value decomposition failed to reconstruct the input");
    std::vector<double> out;
    for (Eigen::Index i = 0; i < s.size(); ++i) out.push_back(std::log(s(i)));
    return out;
}

}  // namespace flagdod
