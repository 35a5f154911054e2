#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmu/field.hpp"

namespace kmu {

template <Field S>
using Vector = std::vector<S>;

/// Small dense row-major matrix over a scalar backend.
template <Field S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vector<S>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector<S> column(std::size_t c) const {
        Vector<S> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    Vector<S> row(std::size_t r) const {
        return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    void set_column(std::size_t c, const Vector<S>& v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    S trace() const {
        S t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    /// Largest entry magnitude (as float; a diagnostic, not a decision).
    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, FieldTraits<S>::magnitude(x));
        return m;
    }

    bool is_zero(double tol = kStructuralTol) const {
        return std::all_of(data_.begin(), data_.end(), [&](const S& x) { return kmu::is_zero(x, tol); });
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
    Matrix operator-() const {
        Matrix m(*this);
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (kmu::is_zero(aik, 0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend Vector<S> operator*(const Matrix& a, const Vector<S>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        Vector<S> out(a.rows_, S(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (kmu::is_zero(v[k], 0.0)) continue;
                out[i] += a(i, k) * v[k];
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<S>& data() const { return data_; }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

// ---- vector helpers -------------------------------------------------------

template <Field S>
Vector<S> zero_vector(std::size_t n) {
    return Vector<S>(n, S(0));
}

template <Field S>
Vector<S> unit_vector(std::size_t n, std::size_t i) {
    Vector<S> v(n, S(0));
    v.at(i) = S(1);
    return v;
}

template <Field S>
Vector<S> operator+(Vector<S> a, const Vector<S>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <Field S>
Vector<S> operator-(Vector<S> a, const Vector<S>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <Field S>
Vector<S> operator-(Vector<S> a) {
    for (auto& x : a) x = -x;
    return a;
}

template <Field S>
Vector<S> operator*(const S& s, Vector<S> a) {
    for (auto& x : a) x *= s;
    return a;
}

/// y += s * x
template <Field S>
void axpy(const S& s, const Vector<S>& x, Vector<S>& y) {
    if (kmu::is_zero(s, 0.0)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!kmu::is_zero(x[i], 0.0)) y[i] += s * x[i];
}

template <Field S>
S dot(const Vector<S>& a, const Vector<S>& b) {
    S acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <Field S>
double max_abs(const Vector<S>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, FieldTraits<S>::magnitude(x));
    return m;
}

template <Field S>
bool is_zero_vector(const Vector<S>& v, double tol = kStructuralTol) {
    return std::all_of(v.begin(), v.end(), [&](const S& x) { return kmu::is_zero(x, tol); });
}

/// Outer product u * v^T.
template <Field S>
Matrix<S> outer(const Vector<S>& u, const Vector<S>& v) {
    Matrix<S> m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

template <Field To, Field From>
Vector<To> convert_vector(const Vector<From>& v) {
    Vector<To> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(convert_scalar<To>(x));
    return out;
}

template <Field To, Field From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = convert_scalar<To>(m(r, c));
    return out;
}

}  // namespace kmu
