#ifndef EXFACT_NUMERIC_HPP
#define EXFACT_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "exfact/matrix.hpp"

namespace exfact {

struct NumericOptions {
    int sweep_limit = 30;
    double off_diagonal_tol = 1e-12;   // relative to the Frobenius norm
    double zero_sigma_rel_tol = 1e-10;  // sigma below this * sigma_max count as zero
    double verify_rel_tol = 1e-9;
};

inline double frobenius_norm(const Matrix<double>& m) {
    double sum = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) sum += m(r, c) * m(r, c);
    return std::sqrt(sum);
}

inline double off_diagonal_norm(const Matrix<double>& m) {
    double sum = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c) sum += m(r, c) * m(r, c);
    return std::sqrt(sum);
}

namespace detail {

/// One Jacobi rotation zeroing a(p, q), accumulated into q_mat.
inline void jacobi_rotate(Matrix<double>& a, Matrix<double>& q_mat, int p, int q) {
    double apq = a(p, q);
    if (apq == 0.0) return;
    double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    double tau = s / (1.0 + c);
    double app = a(p, p), aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = a(q, p) = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        if (r != p && r != q) {
            double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        double qrp = q_mat(r, p), qrq = q_mat(r, q);
        q_mat(r, p) = qrp - s * (qrq + tau * qrp);
        q_mat(r, q) = qrq + s * (qrp - tau * qrq);
    }
}

}  // namespace detail

struct JacobiResult {
    std::vector<double> eigenvalues;  // descending
    Matrix<double> q;                 // columns match the eigenvalue order
    int sweeps = 0;
};

/// Cyclic-by-row Jacobi eigensolver for symmetric matrices. Sweeps rotate
/// every off-diagonal pair until the off-diagonal Frobenius mass drops below
/// off_diagonal_tol * ||S||_F; throws NoConvergence past sweep_limit sweeps.
inline JacobiResult jacobi_symmetric_eig(const Matrix<double>& s, const NumericOptions& opts = {}) {
    if (!s.is_square()) throw DimensionMismatch("jacobi: non-square matrix");
    int n = s.rows();
    double scale = frobenius_norm(s);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (std::fabs(s(r, c) - s(c, r)) > 1e-12 * std::max(1.0, scale))
                throw NotSymmetric("jacobi: matrix is not symmetric");

    JacobiResult out;
    Matrix<double> a = s;
    out.q = Matrix<double>::identity(n);
    // Symmetrize exactly so rotations preserve symmetry bit for bit.
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) a(c, r) = a(r, c);

    double threshold = opts.off_diagonal_tol * std::max(scale, 1e-300);
    bool converged = off_diagonal_norm(a) <= threshold;
    while (!converged) {
        if (out.sweeps >= opts.sweep_limit)
            throw NoConvergence("jacobi: no convergence after " + std::to_string(opts.sweep_limit) +
                                " sweeps");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, out.q, p, q);
        ++out.sweeps;
        converged = off_diagonal_norm(a) <= threshold;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
    out.eigenvalues.resize(n);
    Matrix<double> q_sorted(n, n);
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]);
        for (int r = 0; r < n; ++r) q_sorted(r, c) = out.q(r, order[c]);
    }
    out.q = q_sorted;

    Matrix<double> recon = matmul(matmul(out.q, Matrix<double>::diagonal(out.eigenvalues)),
                                  transpose(out.q));
    if (frobenius_norm(recon - s) > opts.verify_rel_tol * std::max(scale, 1.0))
        throw NoConvergence("jacobi: reconstruction check failed");
    return out;
}

/// Floating-point SVD in Full mode: U m-by-m, Sigma m-by-n, V n-by-n.
struct NumericSvd {
    Matrix<double> u;
    Matrix<double> sigma;
    Matrix<double> v;
    int rank = 0;

    std::vector<double> singular_values() const {
        std::vector<double> out;
        int k = std::min(sigma.rows(), sigma.cols());
        for (int i = 0; i < k; ++i) out.push_back(sigma(i, i));
        return out;
    }
};

namespace detail {

/// Extends orthonormal columns to an orthonormal basis of R^dim using the
/// standard basis vector with the largest residual at each step.
inline void complete_columns_numeric(std::vector<std::vector<double>>& cols, int dim) {
    while (static_cast<int>(cols.size()) < dim) {
        std::vector<double> best;
        double best_norm = -1.0;
        for (int j = 0; j < dim; ++j) {
            std::vector<double> v(dim, 0.0);
            v[j] = 1.0;
            for (const auto& u : cols) {
                double proj = dot(u, v);
                for (int i = 0; i < dim; ++i) v[i] -= proj * u[i];
            }
            double norm = std::sqrt(dot(v, v));
            if (norm > best_norm) {
                best_norm = norm;
                best = std::move(v);
            }
        }
        // Re-orthogonalize once for accuracy, then normalize.
        for (const auto& u : cols) {
            double proj = dot(u, best);
            for (int i = 0; i < dim; ++i) best[i] -= proj * u[i];
        }
        double norm = std::sqrt(dot(best, best));
        for (auto& x : best) x /= norm;
        cols.push_back(std::move(best));
    }
}

}  // namespace detail

/// Numeric SVD via the eigendecomposition of the smaller Gram matrix
/// (mirroring the exact path): sigma = sqrt(max(lambda, 0)) descending,
/// singular vectors transfer through u = (1/sigma) M v (or its transpose
/// twin), and the remaining columns come from Gram-Schmidt completion.
inline NumericSvd numeric_svd(const Matrix<double>& m, const NumericOptions& opts = {}) {
    int rows = m.rows(), cols = m.cols();
    bool gram_of_columns = cols <= rows;  // use M^T M when it is the smaller one
    Matrix<double> mt = transpose(m);
    JacobiResult eig = gram_of_columns ? jacobi_symmetric_eig(matmul(mt, m), opts)
                                       : jacobi_symmetric_eig(matmul(m, mt), opts);

    int k = static_cast<int>(eig.eigenvalues.size());
    std::vector<double> sig(k);
    for (int i = 0; i < k; ++i) sig[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    double sigma_max = k > 0 ? sig[0] : 0.0;
    int rank = 0;
    for (int i = 0; i < k; ++i)
        if (sig[i] > opts.zero_sigma_rel_tol * sigma_max && sig[i] > 0.0) ++rank;

    NumericSvd out;
    out.rank = rank;
    out.sigma = Matrix<double>(rows, cols);
    for (int i = 0; i < rank; ++i) out.sigma(i, i) = sig[i];

    if (gram_of_columns) {
        out.v = eig.q;  // n x n
        std::vector<std::vector<double>> u_cols;
        for (int i = 0; i < rank; ++i) {
            std::vector<double> u = matvec(m, out.v.column(i));
            for (auto& x : u) x /= sig[i];
            u_cols.push_back(std::move(u));
        }
        detail::complete_columns_numeric(u_cols, rows);
        out.u = Matrix<double>::from_columns(u_cols, rows);
    } else {
        out.u = eig.q;  // m x m
        std::vector<std::vector<double>> v_cols;
        for (int i = 0; i < rank; ++i) {
            std::vector<double> v = matvec(mt, out.u.column(i));
            for (auto& x : v) x /= sig[i];
            v_cols.push_back(std::move(v));
        }
        detail::complete_columns_numeric(v_cols, cols);
        out.v = Matrix<double>::from_columns(v_cols, cols);
    }

    Matrix<double> recon = matmul(matmul(out.u, out.sigma), transpose(out.v));
    double denom = std::max(frobenius_norm(m), 1e-300);
    if (frobenius_norm(recon - m) > opts.verify_rel_tol * denom)
        throw NoConvergence("numeric_svd: reconstruction check failed");
    return out;
}

/// One factor of a claimed product, for residual reporting.
struct FactorSpec {
    std::string name;
    Matrix<double> value;
    bool transposed = false;   // multiply the transpose into the product
    bool orthogonal = false;   // also report ||X^T X - I||_F
};

struct ResidualReport {
    double reconstruction = 0.0;
    std::vector<std::pair<std::string, double>> orthogonality;
};

/// Relative Frobenius residual of a claimed factorization, plus an
/// orthogonality residual per factor that claims it.
inline ResidualReport numeric_verify(const Matrix<double>& a, const std::vector<FactorSpec>& factors,
                                     const NumericOptions& = {}) {
    if (factors.empty()) throw DimensionMismatch("numeric_verify: no factors");
    Matrix<double> product = factors[0].transposed ? transpose(factors[0].value) : factors[0].value;
    for (std::size_t i = 1; i < factors.size(); ++i)
        product = matmul(product, factors[i].transposed ? transpose(factors[i].value) : factors[i].value);
    if (product.rows() != a.rows() || product.cols() != a.cols())
        throw DimensionMismatch("numeric_verify: product shape does not match the source matrix");

    ResidualReport report;
    double denom = frobenius_norm(a);
    double diff = frobenius_norm(product - a);
    report.reconstruction = denom > 0 ? diff / denom : (diff > 0 ? diff : 0.0);
    for (const auto& f : factors) {
        if (!f.orthogonal) continue;
        Matrix<double> gram = matmul(transpose(f.value), f.value);
        report.orthogonality.emplace_back(
            f.name, frobenius_norm(gram - Matrix<double>::identity(gram.rows())));
    }
    return report;
}

/// Partial-pivot inverse for float claims; throws SingularMatrix when a
/// pivot collapses relative to the matrix scale.
inline Matrix<double> float_inverse(const Matrix<double>& m) {
    if (!m.is_square()) throw DimensionMismatch("float_inverse: non-square matrix");
    int n = m.rows();
    Matrix<double> aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1.0;
    }
    double scale = std::max(frobenius_norm(m), 1e-300);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(aug(r, col)) > std::fabs(aug(pivot, col))) pivot = r;
        if (std::fabs(aug(pivot, col)) < 1e-12 * scale)
            throw SingularMatrix("float matrix is numerically singular");
        if (pivot != col)
            for (int c = 0; c < 2 * n; ++c) std::swap(aug(pivot, c), aug(col, c));
        double inv_pivot = 1.0 / aug(col, col);
        for (int c = 0; c < 2 * n; ++c) aug(col, c) *= inv_pivot;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug(r, col) == 0.0) continue;
            double f = aug(r, col);
            for (int c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    Matrix<double> inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

}  // namespace exfact

#endif  // EXFACT_NUMERIC_HPP
