#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace flagdod {

/// re + i*im with both parts exact rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational parse(const std::string& re, const std::string& im);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;

private:
    mpq_class re_ = 0;
    mpq_class im_ = 0;
};

using GQ = GaussianRational;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GQ& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GQ& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transpose() const;
    ExactMatrix leading_columns(std::size_t k) const;
    ExactMatrix column(std::size_t c) const;
    ExactMatrix select_columns(const std::vector<std::size_t>& idx) const;
    ExactMatrix hconcat(const ExactMatrix& other) const;

    std::size_t rank() const;
    GQ determinant() const;
    ExactMatrix inverse() const;
    /// Columns form a basis of {x : A x = 0}.
    ExactMatrix nullspace() const;
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GQ> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(ExactMatrix& m);

}  // namespace flagdod
