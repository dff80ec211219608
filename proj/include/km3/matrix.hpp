#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "km3/core.hpp"

namespace km3 {

// Dense row-major matrix over an exact ring (Int or Rational).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            for (auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& b) const {
        if (c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix m(r_, b.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (c_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
        std::vector<T> out(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix operator+(const Matrix& b) const { return zip(b, [](const T& x, const T& y) { return x + y; }); }
    Matrix operator-(const Matrix& b) const { return zip(b, [](const T& x, const T& y) { return x - y; }); }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& v : m.a_) v = -v;
        return m;
    }
    Matrix operator*(const T& s) const {
        Matrix m = *this;
        for (auto& v : m.a_) v *= s;
        return m;
    }

    bool operator==(const Matrix& b) const { return r_ == b.r_ && c_ == b.c_ && a_ == b.a_; }
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    const std::vector<T>& data() const { return a_; }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> m(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(i, j) = U((*this)(i, j));
        return m;
    }

private:
    template <class F>
    Matrix zip(const Matrix& b, F f) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f(a_[i], b.a_[i]);
        return m;
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) { return m * s; }

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

// Bareiss fraction-free elimination; exact for Int and Rational.
template <class T>
T determinant(const Matrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    Matrix<T> a = m;
    T sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Gauss-Jordan inverse over Q. Throws DomainError if singular.
RatMatrix inverse(const RatMatrix& m);

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

// Converts back to Int, throwing if any entry is not integral.
IntMatrix to_integer(const RatMatrix& m);

Rational trace(const RatMatrix& m);
Int trace(const IntMatrix& m);

Int dot(const IntMatrix& gram, const std::vector<Int>& x, const std::vector<Int>& y);

// Sylvester-style signature via exact LDL^T with symmetric pivoting: (n_pos, n_neg, n_zero).
struct Signature {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature(const IntMatrix& gram);

bool is_positive_definite(const IntMatrix& gram);

} // namespace km3
