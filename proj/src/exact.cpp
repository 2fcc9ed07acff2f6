#include "flagdod/exact.hpp"

#include <utility>

#include "flagdod/error.hpp"

namespace flagdod {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::parse(const std::string& re, const std::string& im) {
    try {
        mpq_class a(re), b(im);
        require(sgn(a.get_den()) != 0 && sgn(b.get_den()) != 0, "zero denominator");
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational '" + re + "' / '" + im + "'");
    }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    require(!o.is_zero(), "division by zero");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s = sgn(re_) == 0 ? "" : re_.get_str();
    if (sgn(im_) > 0 && !s.empty()) s += "+";
    if (im_ == 1)
        s += "i";
    else if (im_ == -1)
        s += "-i";
    else
        s += im_.get_str() + "i";
    return s;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    require(!rows.empty(), "empty matrix");
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols(), "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::leading_columns(std::size_t k) const {
    require(k <= cols_, "not enough columns");
    ExactMatrix m(rows_, k);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
    return m;
}

ExactMatrix ExactMatrix::column(std::size_t c) const { return select_columns({c}); }

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    ExactMatrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        require(idx[j] < cols_, "column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, idx[j]);
    }
    return m;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& other) const {
    require(rows_ == other.rows_, "hconcat: row mismatch");
    ExactMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
    }
    return m;
}

std::vector<std::size_t> row_reduce(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        GQ inv = GQ(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GQ f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t ExactMatrix::rank() const {
    ExactMatrix m = *this;
    return row_reduce(m).size();
}

GQ ExactMatrix::determinant() const {
    require(rows_ == cols_, "determinant of a non-square matrix");
    ExactMatrix m = *this;
    GQ det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t p = col;
        while (p < rows_ && m(p, col).is_zero()) ++p;
        if (p == rows_) return 0;
        if (p != col) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        GQ inv = GQ(1) / m(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            GQ f = m(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    require(rows_ == cols_, "inverse of a non-square matrix");
    ExactMatrix aug = hconcat(identity(rows_));
    auto piv = row_reduce(aug);
    require(piv.size() == rows_ && (rows_ == 0 || piv.back() < cols_),
            "matrix is singular");
    ExactMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = aug(r, cols_ + c);
    return inv;
}

ExactMatrix ExactMatrix::nullspace() const {
    ExactMatrix m = *this;
    auto piv = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    ExactMatrix basis(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -m(i, free[k]);
    }
    return basis;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GQ& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
        }
    return m;
}

}  // namespace flagdod
