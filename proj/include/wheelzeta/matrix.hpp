#pragma once

#include "wheelzeta/bigint.hpp"
#include "wheelzeta/bivariate.hpp"
#include "wheelzeta/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace wheelzeta {

/// Dense row-major matrix over an exact ring. Element access is
/// bounds-checked.
template <typename R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::initializer_list<std::initializer_list<R>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidArgument("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    R& operator()(std::size_t r, std::size_t c) { return data_[index(r, c)]; }
    const R& operator()(std::size_t r, std::size_t c) const { return data_[index(r, c)]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    template <typename F>
    auto map(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
        Matrix<Out> m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) {
            throw InvalidArgument("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") out of range " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        return r * cols_ + c;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<BivariatePolynomial>;

template <typename R>
Matrix<R> matrix_power(const Matrix<R>& m, unsigned n) {
    if (!m.square()) throw InvalidArgument("matrix power of a non-square matrix");
    Matrix<R> acc = Matrix<R>::identity(m.rows());
    for (unsigned i = 0; i < n; ++i) acc = acc * m;
    return acc;
}

/// Fraction-free (Bareiss) determinant: every division is exact.
template <typename R>
R det_bareiss(Matrix<R> m) {
    if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return R(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(num, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    if (negate) d = R(0) - d;
    return d;
}

namespace detail {

template <typename R>
R cofactor_rec(const Matrix<R>& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = m.rows();
    if (row == n) return R(1);
    R acc(0);
    std::size_t sign_pos = 0;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const std::size_t c = cols[idx];
        if (c == n) continue;  // used
        const bool neg = (sign_pos++ % 2) == 1;
        if (is_zero(m(row, c))) continue;
        cols[idx] = n;
        R minor = cofactor_rec(m, cols, row + 1);
        cols[idx] = c;
        R term = m(row, c) * minor;
        if (neg) acc -= term; else acc += term;
    }
    return acc;
}

} // namespace detail

/// Laplace expansion along rows; exponential, meant for small matrices and
/// as an independent cross-check of det_bareiss. Needs only ring operations.
template <typename R>
R det_cofactor(const Matrix<R>& m) {
    if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return detail::cofactor_rec(m, cols, 0);
}

/// Symbolic determinant of a polynomial matrix.
inline BivariatePolynomial det_poly(const PolyMatrix& m) { return det_bareiss(m); }

inline IntMatrix evaluate(const PolyMatrix& m, const BigInt& q, const BigInt& t) {
    return m.map([&](const BivariatePolynomial& p) { return p.eval(q, t); });
}

} // namespace wheelzeta
