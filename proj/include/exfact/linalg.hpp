#ifndef EXFACT_LINALG_HPP
#define EXFACT_LINALG_HPP

#include <vector>

#include "exfact/matrix.hpp"

namespace exfact {

/// One elementary row operation, as recorded in an RREF step log.
template <typename T>
struct RowOp {
    enum class Kind { Swap, Scale, AddMultiple };
    Kind kind;
    int target = 0;
    int source = 0;  // unused for Scale
    T factor = T(0);  // unused for Swap

    static RowOp swap(int i, int j) { return {Kind::Swap, i, j, T(0)}; }
    static RowOp scale(int row, const T& f) { return {Kind::Scale, row, row, f}; }
    static RowOp add_multiple(int target, int source, const T& f) {
        return {Kind::AddMultiple, target, source, f};
    }

    void apply(Matrix<T>& m) const {
        switch (kind) {
            case Kind::Swap:
                for (int c = 0; c < m.cols(); ++c) std::swap(m(target, c), m(source, c));
                break;
            case Kind::Scale:
                for (int c = 0; c < m.cols(); ++c) m(target, c) = m(target, c) * factor;
                break;
            case Kind::AddMultiple:
                for (int c = 0; c < m.cols(); ++c) m(target, c) += factor * m(source, c);
                break;
        }
    }
};

template <typename T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<int> pivot_columns;
    int rank = 0;
    std::vector<RowOp<T>> step_log;
};

/// Replays a step log on a matrix; used to validate that the log reproduces
/// the reduced form bit for bit.
template <typename T>
Matrix<T> replay(const Matrix<T>& input, const std::vector<RowOp<T>>& log) {
    Matrix<T> m = input;
    for (const auto& op : log) op.apply(m);
    return m;
}

/// Gauss-Jordan elimination to reduced row echelon form with leading-one
/// normalization. Pivoting is positional (first nonzero scanning
/// top-to-bottom in the leftmost unresolved column); exact arithmetic has no
/// roundoff, so this maximizes reproducibility.
template <typename T>
RrefResult<T> rref(const Matrix<T>& input) {
    RrefResult<T> out;
    out.reduced = input;
    Matrix<T>& m = out.reduced;
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r) {
            if (!scalar_is_zero(m(r, col))) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        if (found != pivot_row) {
            auto op = RowOp<T>::swap(pivot_row, found);
            op.apply(m);
            out.step_log.push_back(op);
        }
        if (m(pivot_row, col) != T(1)) {
            auto op = RowOp<T>::scale(pivot_row, T(1) / m(pivot_row, col));
            op.apply(m);
            out.step_log.push_back(op);
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || scalar_is_zero(m(r, col))) continue;
            auto op = RowOp<T>::add_multiple(r, pivot_row, -m(r, col));
            op.apply(m);
            out.step_log.push_back(op);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = static_cast<int>(out.pivot_columns.size());
    return out;
}

// -- canonical vector forms ------------------------------------------------------

/// Integer-primitive form: denominators cleared, entries divided by their
/// gcd, first nonzero entry positive.
inline std::vector<Rational> canonicalize_vector(const std::vector<Rational>& v) {
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        den_lcm = lcm(den_lcm, x.denominator());
    }
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rational(den_lcm);
    for (const auto& x : out)
        if (!x.is_zero()) num_gcd = gcd(num_gcd, x.numerator());
    if (num_gcd == 0) return out;  // zero vector
    int lead_sign = 0;
    for (const auto& x : out) {
        if (!x.is_zero()) {
            lead_sign = x.sign();
            break;
        }
    }
    Rational divisor(lead_sign < 0 ? -num_gcd : num_gcd);
    for (auto& x : out) x /= divisor;
    return out;
}

/// Same idea for quadratic entries: clears every rational denominator in the
/// a + b*sqrt(d) components, divides by the common numerator gcd, and makes
/// the first nonzero entry positive (exact sign analysis).
inline std::vector<QuadRational> canonicalize_vector(const std::vector<QuadRational>& v) {
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& x : v) {
        if (!x.rational_part().is_zero()) den_lcm = lcm(den_lcm, x.rational_part().denominator());
        if (!x.surd_coeff().is_zero()) den_lcm = lcm(den_lcm, x.surd_coeff().denominator());
    }
    std::vector<QuadRational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * QuadRational(Rational(den_lcm));
    for (const auto& x : out) {
        if (!x.rational_part().is_zero()) num_gcd = gcd(num_gcd, x.rational_part().numerator());
        if (!x.surd_coeff().is_zero()) num_gcd = gcd(num_gcd, x.surd_coeff().numerator());
    }
    if (num_gcd == 0) return out;
    int lead_sign = 0;
    for (const auto& x : out) {
        if (!x.is_zero()) {
            lead_sign = x.sign();
            break;
        }
    }
    QuadRational divisor(Rational(lead_sign < 0 ? -num_gcd : num_gcd));
    for (auto& x : out) x /= divisor;
    return out;
}

/// Basis of the right nullspace, one canonical vector per free column,
/// ordered by free-column index.
template <typename T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free_col] = T(1);
        for (std::size_t p = 0; p < r.pivot_columns.size(); ++p)
            v[r.pivot_columns[p]] = -r.reduced(static_cast<int>(p), free_col);
        basis.push_back(canonicalize_vector(v));
    }
    return basis;
}

/// Exact inverse via augmented RREF; throws SingularMatrix.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = T(1);
    }
    auto red = rref(aug).reduced;
    for (int i = 0; i < n; ++i)
        if (red(i, i) != T(1)) throw SingularMatrix("matrix is singular");
    Matrix<T> inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
    return inv;
}

/// Fraction-free (Bareiss) determinant; every division is exact, so this is
/// valid over any field in the tower that supports division.
template <typename T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return T(1);
    Matrix<T> a = m;
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (scalar_is_zero(a(k, k))) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!scalar_is_zero(a(r, k))) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return T(0);
            for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return sign < 0 ? T(0) - det : det;
}

/// Radical sums do not support general division, so the determinant falls
/// back to cofactor expansion. Intended for the small factor matrices that
/// occur here (n <= 4).
inline RadicalSum determinant(const Matrix<RadicalSum>& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return RadicalSum(1);
    if (n == 1) return m(0, 0);
    RadicalSum det;
    for (int c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix<RadicalSum> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int mc = 0;
            for (int cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor(r - 1, mc++) = m(r, cc);
            }
        }
        RadicalSum term = m(0, c) * determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

template <typename T>
T trace(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionMismatch("trace of non-square matrix");
    T sum(0);
    for (int i = 0; i < m.rows(); ++i) sum += m(i, i);
    return sum;
}

}  // namespace exfact

#endif  // EXFACT_LINALG_HPP
