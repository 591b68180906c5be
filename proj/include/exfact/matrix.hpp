#ifndef EXFACT_MATRIX_HPP
#define EXFACT_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "exfact/errors.hpp"
#include "exfact/scalar.hpp"

namespace exfact {

/// Dense row-major matrix over one scalar field (Rational, RadicalSum,
/// QuadRational or double). Values are immutable in spirit: operations
/// return new matrices. Zero-width factors (r = 0 reduced SVDs) are legal,
/// so dimensions may be zero.
template <typename T>
class Matrix {
  public:
    using Scalar = T;

    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_) throw RaggedRows("ragged initializer rows");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<T> row(int r) const {
        std::vector<T> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
        return out;
    }
    std::vector<T> column(int c) const {
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& entries) {
        Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
        for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[i];
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, int rows) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (int c = 0; c < m.cols(); ++c) {
            if (static_cast<int>(cols[c].size()) != rows)
                throw DimensionMismatch("column length does not match row count");
            for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols) {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (int r = 0; r < m.rows(); ++r) {
            if (static_cast<int>(rows[r].size()) != cols)
                throw DimensionMismatch("row length does not match column count");
            for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (scalar_is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    return matmul(a, b);
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix addition shapes");
    Matrix<T> out = a;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
    return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix subtraction shapes");
    Matrix<T> out = a;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
    return out;
}

template <typename T>
Matrix<T> scale(const Matrix<T>& m, const T& factor) {
    Matrix<T> out = m;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = out(r, c) * factor;
    return out;
}

template <typename T>
bool is_symmetric(const Matrix<T>& m) {
    if (!m.is_square()) return false;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = r + 1; c < m.cols(); ++c)
            if (m(r, c) != m(c, r)) return false;
    return true;
}

template <typename T>
bool is_diagonal(const Matrix<T>& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c && !scalar_is_zero(m(r, c))) return false;
    return true;
}

// -- field promotions ----------------------------------------------------------

inline Matrix<RadicalSum> to_radical(const Matrix<Rational>& m) {
    Matrix<RadicalSum> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = RadicalSum(m(r, c));
    return out;
}

inline Matrix<QuadRational> to_quadratic(const Matrix<Rational>& m) {
    Matrix<QuadRational> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = QuadRational(m(r, c));
    return out;
}

template <typename T>
Matrix<double> to_float(const Matrix<T>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = to_double(m(r, c));
    return out;
}

// -- vector operations ---------------------------------------------------------

template <typename T>
T dot(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != v.size()) throw DimensionMismatch("dot: vector lengths differ");
    T sum(0);
    for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
    return sum;
}

template <typename T>
std::vector<T> cross(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != 3 || v.size() != 3) throw DimensionMismatch("cross: requires length-3 vectors");
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <typename T>
T norm_squared(const std::vector<T>& v) {
    return dot(v, v);
}

template <typename T>
std::vector<T> operator-(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != v.size()) throw DimensionMismatch("vector subtraction lengths");
    std::vector<T> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

template <typename T>
std::vector<T> scale(const std::vector<T>& v, const T& factor) {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
    return out;
}

template <typename T>
std::vector<T> matvec(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw DimensionMismatch("matvec shapes");
    std::vector<T> out(m.rows(), T(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

}  // namespace exfact

#endif  // EXFACT_MATRIX_HPP
