#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "magicsq/errors.hpp"
#include "magicsq/int_square.hpp"

namespace magicsq {

namespace detail {
inline bool entry_finite(double x) { return std::isfinite(x); }
inline bool entry_finite(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}
inline double entry_abs_sq(double x) { return x * x; }
inline double entry_abs_sq(const std::complex<double>& z) { return std::norm(z); }
} // namespace detail

/// Dense rows x cols matrix over double or complex<double>, row-major.
/// Entries must be finite on construction.
template <class T>
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T{}) {
        if (rows < 1 || cols < 1) throw PreconditionError("Matrix dimensions must be >= 1");
    }

    Matrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows < 1 || cols < 1) throw PreconditionError("Matrix dimensions must be >= 1");
        if (data_.size() != static_cast<std::size_t>(rows) * cols)
            throw ShapeError("Matrix entry count does not match rows*cols");
        for (const T& v : data_)
            if (!detail::entry_finite(v)) throw PreconditionError("Matrix entries must be finite");
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
        std::vector<T> flat;
        flat.reserve(static_cast<std::size_t>(r) * c);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw ShapeError("Matrix::from_rows requires equal-length rows");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return Matrix(r, c, std::move(flat));
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    T operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<const T> entries() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
    Matrix<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <class T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("subtract: shape mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <class T>
Matrix<T> scale(T c, const Matrix<T>& a) {
    Matrix<T> out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
    Matrix<T> out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

template <class T>
T trace(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw ShapeError("trace: matrix not square");
    T t{};
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

template <class T>
double frobenius_norm(const Matrix<T>& a) {
    double sq = 0.0;
    for (const T& v : a.entries()) sq += detail::entry_abs_sq(v);
    return std::sqrt(sq);
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const T aij = a(i, j);
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

template <class T>
Matrix<T> identity(int n) {
    Matrix<T> out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = T{1};
    return out;
}

template <class T>
Matrix<T> diagonal_matrix(const std::vector<T>& diag) {
    const int n = static_cast<int>(diag.size());
    Matrix<T> out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = diag[i];
    return out;
}

RealMatrix to_real(const IntSquare& m);
ComplexMatrix to_complex(const IntSquare& m);
ComplexMatrix to_complex(const RealMatrix& m);

} // namespace magicsq
