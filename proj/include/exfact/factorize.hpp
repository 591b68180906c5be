#ifndef EXFACT_FACTORIZE_HPP
#define EXFACT_FACTORIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "exfact/spectrum.hpp"

namespace exfact {

/// A = P * D * P^-1 with rational factors; column i of P is an eigenvector
/// for D(i, i) and eigenvalues appear in descending order.
struct Diagonalization {
    Matrix<Rational> p;
    Matrix<Rational> d;
    Matrix<Rational> p_inv;
};

/// A = P * D * P^T with orthonormal P (radical entries) and rational D.
struct OrthogonalDiagonalization {
    Matrix<RadicalSum> p;
    Matrix<Rational> d;
};

enum class SvdMode { Full, Reduced };

/// M = U * Sigma * V^T. Full mode: U m-by-m, Sigma m-by-n, V n-by-n.
/// Reduced mode keeps the r positive singular values: U m-by-r, Sigma
/// r-by-r positive diagonal, V n-by-r.
struct Svd {
    SvdMode mode;
    Matrix<RadicalSum> u;
    Matrix<RadicalSum> sigma;
    Matrix<RadicalSum> v;
    int rank = 0;

    std::vector<RadicalTerm> singular_values() const {
        std::vector<RadicalTerm> out;
        for (int i = 0; i < rank; ++i) out.push_back(sigma(i, i).single_term());
        return out;
    }
};

/// The Gram matrix M^T M has eigenvalues outside the rational field, so the
/// exact SVD path cannot proceed; callers fall back to the numeric module.
struct IrrationalGramSpectrum : Error {
    using Error::Error;
};

namespace detail {

inline Spectrum spectrum_of(const Eigensystem& es) {
    Spectrum s;
    for (const auto& e : es) s.push_back({e.value, e.algebraic_multiplicity});
    return s;
}

}  // namespace detail

/// Sequential Gram-Schmidt projections over exact rationals. The first
/// vector is kept; every output is re-canonicalized to primitive integer
/// form with a positive leading entry, which preserves orthogonality and
/// span. Throws DependentInput when a projection vanishes.
inline std::vector<std::vector<Rational>> gram_schmidt(
    const std::vector<std::vector<Rational>>& basis) {
    std::vector<std::vector<Rational>> ortho;
    for (const auto& v : basis) {
        std::vector<Rational> w = v;
        for (const auto& q : ortho) {
            Rational coeff = dot(q, w) / norm_squared(q);
            w = w - scale(q, coeff);
        }
        bool zero = true;
        for (const auto& x : w) zero = zero && x.is_zero();
        if (zero) throw DependentInput("gram_schmidt: linearly dependent input");
        ortho.push_back(canonicalize_vector(w));
    }
    return ortho;
}

/// Scales column j by 1/sqrt(<q_j, q_j>), producing exact radical entries.
inline Matrix<RadicalSum> normalize_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return Matrix<RadicalSum>(0, 0);
    int rows = static_cast<int>(cols[0].size());
    Matrix<RadicalSum> out(rows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw DimensionMismatch("normalize_columns: ragged columns");
        Rational s = norm_squared(cols[j]);
        if (s.is_zero()) throw ZeroColumn("normalize_columns: zero column " + std::to_string(j + 1));
        RadicalTerm unit = invert(sqrt_of_rational(s));  // 1/sqrt(s)
        for (int i = 0; i < rows; ++i)
            out(i, static_cast<int>(j)) =
                RadicalSum(RadicalTerm{cols[j][i] * unit.coeff, unit.radicand});
    }
    return out;
}

/// Extends pairwise-orthonormal radical vectors to a full orthonormal set of
/// the ambient space via the exact nullspace of the stacked vectors. Each
/// partial vector must be a rational vector times a single radical, or the
/// computation leaves the tower (FieldEscape).
inline std::vector<std::vector<RadicalSum>> complete_orthonormal(
    const std::vector<std::vector<RadicalSum>>& partial, int dim) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& vec : partial) {
        if (static_cast<int>(vec.size()) != dim)
            throw DimensionMismatch("complete_orthonormal: vector length != dim");
        BigInt radicand = 0;  // 0 = not seen yet
        std::vector<Rational> row(vec.size(), Rational(0));
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i].is_zero()) continue;
            if (vec[i].terms().size() > 1)
                throw FieldEscape("complete_orthonormal: multi-radicand entry " + vec[i].str());
            RadicalTerm t = vec[i].single_term();
            if (radicand == 0) radicand = t.radicand;
            if (t.radicand != radicand)
                throw FieldEscape("complete_orthonormal: mixed radicands sqrt(" + radicand.str() +
                                  ") and sqrt(" + t.radicand.str() + ")");
            row[i] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    auto kernel = nullspace_basis(Matrix<Rational>::from_rows(rows, dim));
    auto ortho = kernel.size() > 1 ? gram_schmidt(kernel) : kernel;
    Matrix<RadicalSum> normalized = normalize_columns(ortho);
    std::vector<std::vector<RadicalSum>> out;
    for (int c = 0; c < normalized.cols(); ++c) out.push_back(normalized.column(c));
    return out;
}

/// Diagonalization A = P D P^-1 over the rationals: eigensystem in spectrum
/// order, P assembled eigenvector by eigenvector, P^-1 by exact inversion.
inline Diagonalization diagonalize(const Matrix<Rational>& a) {
    if (!a.is_square()) throw DimensionMismatch("diagonalize: non-square matrix");
    Eigensystem es = eigensystem(a);
    for (const auto& entry : es)
        if (entry.defective())
            throw NotDiagonalizable("eigenvalue " + to_string(entry.value) +
                                        " has geometric multiplicity " +
                                        std::to_string(entry.geometric_multiplicity()) +
                                        " below algebraic multiplicity " +
                                        std::to_string(entry.algebraic_multiplicity),
                                    entry.value);
    if (!spectrum_is_rational(detail::spectrum_of(es)))
        throw IrrationalSpectrum("spectrum leaves the rational field", detail::spectrum_of(es));
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> diag;
    for (const auto& entry : es)
        for (const auto& v : entry.rational_basis) {
            cols.push_back(v);
            diag.push_back(std::get<Rational>(entry.value));
        }
    Diagonalization out;
    out.p = Matrix<Rational>::from_columns(cols, a.rows());
    out.d = Matrix<Rational>::diagonal(diag);
    out.p_inv = inverse(out.p);
    return out;
}

/// Orthogonal diagonalization of a symmetric rational matrix: Gram-Schmidt
/// inside each multidimensional eigenspace, then a mandatory normalization
/// pass. Eigenvectors across distinct eigenvalues are orthogonal by
/// symmetry; both P^T P = I and P D P^T = A are re-checked exactly.
inline OrthogonalDiagonalization orthogonal_diagonalize(const Matrix<Rational>& s) {
    if (!is_symmetric(s)) throw NotSymmetric("orthogonal_diagonalize: matrix is not symmetric");
    Eigensystem es = eigensystem(s);
    Spectrum spectrum = detail::spectrum_of(es);
    if (!spectrum_is_rational(spectrum))
        throw IrrationalSpectrum("symmetric matrix has irrational eigenvalues", spectrum);
    std::vector<std::vector<Rational>> cols;
    std::vector<Rational> diag;
    for (const auto& entry : es) {
        auto basis = entry.rational_basis;
        if (basis.size() > 1) basis = gram_schmidt(basis);
        for (const auto& v : basis) {
            cols.push_back(v);
            diag.push_back(std::get<Rational>(entry.value));
        }
    }
    if (static_cast<int>(cols.size()) != s.rows())
        throw Error("orthogonal_diagonalize: symmetric matrix produced a defective eigensystem");
    OrthogonalDiagonalization out;
    out.p = normalize_columns(cols);
    out.d = Matrix<Rational>::diagonal(diag);
    Matrix<RadicalSum> pt = transpose(out.p);
    if (matmul(pt, out.p) != Matrix<RadicalSum>::identity(s.rows()))
        throw Error("orthogonal_diagonalize: P^T P != I");
    if (matmul(matmul(out.p, to_radical(out.d)), pt) != to_radical(s))
        throw Error("orthogonal_diagonalize: P D P^T != A");
    return out;
}

/// Exact SVD through the Gram matrix M^T M: its eigenvectors give V, the
/// singular values are sqrt of its eigenvalues, U transfers over via
/// u_i = (1/sigma_i) M v_i, and full mode completes U orthonormally. The
/// zero-eigenvalue eigenvectors of M^T M already complete V.
inline Svd svd(const Matrix<Rational>& m, SvdMode mode) {
    Matrix<Rational> gram = matmul(transpose(m), m);
    Eigensystem es;
    try {
        es = eigensystem(gram);
    } catch (const UnsupportedSpectrum& e) {
        throw IrrationalGramSpectrum(std::string("gram spectrum unsupported: ") + e.what());
    }
    Spectrum spectrum = detail::spectrum_of(es);
    if (!spectrum_is_rational(spectrum))
        throw IrrationalGramSpectrum("gram matrix has irrational eigenvalues");

    std::vector<std::vector<Rational>> v_cols;
    std::vector<RadicalTerm> sigmas;
    for (const auto& entry : es) {
        Rational lambda = std::get<Rational>(entry.value);
        if (lambda.sign() < 0) throw Error("svd: negative Gram eigenvalue " + lambda.str());
        auto basis = entry.rational_basis;
        if (basis.size() > 1) basis = gram_schmidt(basis);
        for (const auto& v : basis) {
            v_cols.push_back(v);
            if (lambda.sign() > 0) sigmas.push_back(sqrt_of_rational(lambda));
        }
    }
    int r = static_cast<int>(sigmas.size());
    Matrix<RadicalSum> v_full = normalize_columns(v_cols);  // n x n, zero-space last
    Matrix<RadicalSum> m_rad = to_radical(m);

    std::vector<std::vector<RadicalSum>> u_cols;
    for (int i = 0; i < r; ++i)
        u_cols.push_back(scale(matvec(m_rad, v_full.column(i)), RadicalSum(invert(sigmas[i]))));

    Svd out;
    out.mode = mode;
    out.rank = r;
    if (mode == SvdMode::Full) {
        for (auto& extra : complete_orthonormal(u_cols, m.rows())) u_cols.push_back(std::move(extra));
        out.u = Matrix<RadicalSum>::from_columns(u_cols, m.rows());
        out.v = v_full;
        out.sigma = Matrix<RadicalSum>(m.rows(), m.cols());
        for (int i = 0; i < r; ++i) out.sigma(i, i) = RadicalSum(sigmas[i]);
        if (matmul(transpose(out.u), out.u) != Matrix<RadicalSum>::identity(m.rows()) ||
            matmul(transpose(out.v), out.v) != Matrix<RadicalSum>::identity(m.cols()))
            throw Error("svd: factors lost orthogonality");
        if (matmul(matmul(out.u, out.sigma), transpose(out.v)) != m_rad)
            throw Error("svd: U Sigma V^T != M");
    } else {
        std::vector<std::vector<RadicalSum>> v_sub;
        for (int c = 0; c < r; ++c) v_sub.push_back(v_full.column(c));
        out.u = Matrix<RadicalSum>::from_columns(u_cols, m.rows());
        out.v = Matrix<RadicalSum>::from_columns(v_sub, m.cols());
        out.sigma = Matrix<RadicalSum>(r, r);
        for (int i = 0; i < r; ++i) out.sigma(i, i) = RadicalSum(sigmas[i]);
        if (matmul(matmul(out.u, out.sigma), transpose(out.v)) != m_rad)
            throw Error("svd: U D V^T != M");
    }
    return out;
}

/// Moore-Penrose pseudoinverse as V D^-1 U^T over the reduced SVD. The
/// radicals cancel, so the result is rational; this is asserted.
inline Matrix<Rational> pseudoinverse(const Matrix<Rational>& m) {
    Svd s = svd(m, SvdMode::Reduced);
    Matrix<RadicalSum> d_inv(s.rank, s.rank);
    for (int i = 0; i < s.rank; ++i) d_inv(i, i) = RadicalSum(invert(s.sigma(i, i).single_term()));
    Matrix<RadicalSum> product = matmul(matmul(s.v, d_inv), transpose(s.u));
    Matrix<Rational> out(m.cols(), m.rows());
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c) out(r, c) = product(r, c).rational_value();
    return out;
}

}  // namespace exfact

#endif  // EXFACT_FACTORIZE_HPP
