#ifndef EXFACT_TESTS_HELPERS_HPP
#define EXFACT_TESTS_HELPERS_HPP

#include <exfact/exfact.hpp>

#include <random>
#include <vector>

namespace exfact::testing {

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline Matrix<Rational> random_int_matrix(std::mt19937& rng, int rows, int cols, int lo = -9,
                                          int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix<Rational> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = Rational(dist(rng));
    return m;
}

inline Matrix<Rational> random_invertible(std::mt19937& rng, int n) {
    for (;;) {
        Matrix<Rational> m = random_int_matrix(rng, n, n);
        if (!determinant(m).is_zero()) return m;
    }
}

inline Matrix<Rational> random_symmetric(std::mt19937& rng, int n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix<Rational> m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            m(r, c) = Rational(dist(rng));
            m(c, r) = m(r, c);
        }
    return m;
}

/// Exactly orthogonal rational matrix: a product of Givens rotations built
/// from Pythagorean triples, column sign flips, and a column permutation.
inline Matrix<Rational> random_rational_orthogonal(std::mt19937& rng, int n) {
    static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
    Matrix<Rational> q = Matrix<Rational>::identity(n);
    if (n >= 2) {
        std::uniform_int_distribution<int> axis(0, n - 1), pick(0, 4), coin(0, 1);
        for (int k = 0; k < n + 2; ++k) {
            int i = axis(rng), j = axis(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            const int* t = triples[pick(rng)];
            Rational c(BigInt(t[0]), BigInt(t[2])), s(BigInt(t[1]), BigInt(t[2]));
            if (coin(rng)) s = -s;
            Matrix<Rational> g = Matrix<Rational>::identity(n);
            g(i, i) = c;
            g(j, j) = c;
            g(i, j) = -s;
            g(j, i) = s;
            q = matmul(q, g);
        }
        std::uniform_int_distribution<int> coin2(0, 1);
        for (int c = 0; c < n; ++c)
            if (coin2(rng))
                for (int r = 0; r < n; ++r) q(r, c) = -q(r, c);
    }
    return q;
}

/// Positive singular values, strictly descending-ish small rationals.
inline std::vector<Rational> random_positive_descending(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 3);
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(Rational(BigInt(num(rng)), BigInt(den(rng))));
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return out;
}

/// Pairwise distinct variant. Distinct values keep every eigenspace
/// one-dimensional, so the exact factorizations only ever normalize
/// primitive rotation columns (whose squared norms stay smooth); repeated
/// spectra are covered by the fixed worked examples instead.
inline std::vector<Rational> random_distinct_descending(std::mt19937& rng, int count) {
    for (;;) {
        auto out = random_positive_descending(rng, count);
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) distinct = distinct && out[i] != out[i + 1];
        if (distinct) return out;
    }
}

/// M = Q_left * Sigma * Q_right^T with exactly-known singular values.
inline Matrix<Rational> matrix_with_singular_values(std::mt19937& rng, int rows, int cols,
                                                    const std::vector<Rational>& sigmas) {
    Matrix<Rational> s(rows, cols);
    for (std::size_t i = 0; i < sigmas.size(); ++i) s(static_cast<int>(i), static_cast<int>(i)) = sigmas[i];
    return matmul(matmul(random_rational_orthogonal(rng, rows), s),
                  transpose(random_rational_orthogonal(rng, cols)));
}

/// Symmetric matrix with an exactly-known rational spectrum: Q D Q^T.
inline Matrix<Rational> symmetric_with_spectrum(std::mt19937& rng, const std::vector<Rational>& eigs) {
    int n = static_cast<int>(eigs.size());
    Matrix<Rational> q = random_rational_orthogonal(rng, n);
    return matmul(matmul(q, Matrix<Rational>::diagonal(eigs)), transpose(q));
}

/// Diagonalizable matrix with a known rational spectrum: P D P^-1.
inline Matrix<Rational> diagonalizable_with_spectrum(std::mt19937& rng,
                                                     const std::vector<Rational>& eigs) {
    int n = static_cast<int>(eigs.size());
    Matrix<Rational> p = random_invertible(rng, n);
    return matmul(matmul(p, Matrix<Rational>::diagonal(eigs)), inverse(p));
}

inline std::vector<std::vector<Rational>> random_independent_vectors(std::mt19937& rng, int count,
                                                                     int dim) {
    for (;;) {
        std::vector<std::vector<Rational>> vecs;
        Matrix<Rational> stacked(count, dim);
        for (int i = 0; i < count; ++i) {
            auto m = random_int_matrix(rng, 1, dim, -5, 5);
            vecs.push_back(m.row(0));
            for (int c = 0; c < dim; ++c) stacked(i, c) = m(0, c);
        }
        if (rref(stacked).rank == count) return vecs;
    }
}

}  // namespace exfact::testing

#endif  // EXFACT_TESTS_HELPERS_HPP
