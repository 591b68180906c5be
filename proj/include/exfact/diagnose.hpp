#ifndef EXFACT_DIAGNOSE_HPP
#define EXFACT_DIAGNOSE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exfact/factorize.hpp"
#include "exfact/numeric.hpp"

namespace exfact {

/// Catalog of classified factorization mistakes. Codes are a diagnostic aid
/// layered on hard failures; every finding carries the checkable fact that
/// triggered it.
enum class MistakeCode {
    ReconstructionMismatch,
    NotEigenpair,
    UnnormalizedColumns,
    NonOrthogonalEigenspace,
    TransposeIsNotInverse,
    WrongGramMatrix,
    ReducedAsFull,
    MissingCompletion,
    SigmaNotDescending,
    SigmaNegative,
    SigmaShapeMismatch,
    NotSymmetricInput,
};

inline std::string to_string(MistakeCode code) {
    switch (code) {
        case MistakeCode::ReconstructionMismatch: return "RECONSTRUCTION_MISMATCH";
        case MistakeCode::NotEigenpair: return "NOT_EIGENPAIR";
        case MistakeCode::UnnormalizedColumns: return "UNNORMALIZED_COLUMNS";
        case MistakeCode::NonOrthogonalEigenspace: return "NON_ORTHOGONAL_EIGENSPACE";
        case MistakeCode::TransposeIsNotInverse: return "TRANSPOSE_IS_NOT_INVERSE";
        case MistakeCode::WrongGramMatrix: return "WRONG_GRAM_MATRIX";
        case MistakeCode::ReducedAsFull: return "REDUCED_AS_FULL";
        case MistakeCode::MissingCompletion: return "MISSING_COMPLETION";
        case MistakeCode::SigmaNotDescending: return "SIGMA_NOT_DESCENDING";
        case MistakeCode::SigmaNegative: return "SIGMA_NEGATIVE";
        case MistakeCode::SigmaShapeMismatch: return "SIGMA_SHAPE_MISMATCH";
        case MistakeCode::NotSymmetricInput: return "NOT_SYMMETRIC_INPUT";
    }
    return "UNKNOWN";
}

/// Which component of the claim a finding points at, with 1-based row or
/// column indices where applicable.
struct Locus {
    std::string component;
    std::vector<int> indices;

    friend bool operator==(const Locus& a, const Locus& b) {
        return a.component == b.component && a.indices == b.indices;
    }
};

struct Finding {
    MistakeCode code;
    Locus locus;
    std::string evidence;
};

enum class Verdict { Valid, Invalid };

struct Diagnosis {
    Verdict verdict = Verdict::Valid;
    std::vector<Finding> findings;
    std::optional<ResidualReport> residuals;  // filled for float claims

    bool valid() const { return verdict == Verdict::Valid; }
    bool has(MistakeCode code) const {
        for (const auto& f : findings)
            if (f.code == code) return true;
        return false;
    }
};

struct CheckOptions {
    double tol = 1e-6;  // relative tolerance for float claims
};

// claimed factorizations --------------------------------------------------------

template <typename T>
struct DiagonalizationClaim {
    Matrix<T> a, p, d;
    std::optional<Matrix<T>> p_inv;
};

template <typename T>
struct OrthogonalDiagonalizationClaim {
    Matrix<T> a, p, d;
};

template <typename T>
struct SvdClaim {
    Matrix<T> m, u, sigma, v;
    SvdMode asserted_mode = SvdMode::Full;
};

namespace detail {

template <typename T>
inline constexpr bool is_float_claim = std::is_same_v<T, double>;

template <typename T>
std::string render_scalar(const T& x) {
    return to_string(x);
}

template <typename T>
std::string render_vec(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += render_scalar(v[i]);
    }
    return out + ")";
}

template <typename T>
bool eq_scalar(const T& x, const T& y, double tol) {
    if constexpr (is_float_claim<T>) {
        return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(y));
    } else {
        (void)tol;
        return x == y;
    }
}

template <typename T>
bool eq_vector(const std::vector<T>& x, const std::vector<T>& y, double tol) {
    if (x.size() != y.size()) return false;
    if constexpr (is_float_claim<T>) {
        double diff = 0, scale = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            diff += (x[i] - y[i]) * (x[i] - y[i]);
            scale = std::max(scale, std::fabs(y[i]));
        }
        return std::sqrt(diff) <= tol * scale * std::sqrt(double(x.size()));
    } else {
        (void)tol;
        return x == y;
    }
}

template <typename T>
bool eq_matrix(const Matrix<T>& x, const Matrix<T>& y, double tol) {
    if constexpr (is_float_claim<T>) {
        if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
        return frobenius_norm(x - y) <= tol * std::max(1.0, frobenius_norm(y));
    } else {
        (void)tol;
        return x == y;
    }
}

struct FindingSink {
    std::vector<Finding> findings;

    void add(MistakeCode code, Locus locus, std::string evidence) {
        for (const auto& f : findings)
            if (f.code == code && f.locus == locus) return;
        findings.push_back({code, std::move(locus), std::move(evidence)});
    }
};

/// Middle-factor structure check shared by all three claim kinds: every
/// off-diagonal entry must vanish.
template <typename T>
void check_diagonal_factor(const Matrix<T>& d, const std::string& name, double tol,
                           FindingSink& sink) {
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c) {
            if (r == c) continue;
            bool zero = eq_scalar(d(r, c), T(0), tol);
            if (!zero)
                sink.add(MistakeCode::SigmaShapeMismatch, {name, {r + 1, c + 1}},
                         name + "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                             ") = " + render_scalar(d(r, c)) + " but must be 0");
        }
}

/// Per-column eigenpair checks plus the unit-norm refinement used by the
/// orthogonal checker. A column that satisfies A p_i = d_ii p_i (which is
/// scale-invariant) but has squared norm != 1 is the "right direction,
/// skipped normalization" mistake; anything else is NOT_EIGENPAIR.
template <typename T>
void check_eigenpairs(const Matrix<T>& a, const Matrix<T>& p, const Matrix<T>& d, bool want_unit,
                      double tol, FindingSink& sink) {
    for (int i = 0; i < p.cols(); ++i) {
        std::vector<T> col = p.column(i);
        bool zero_col = true;
        for (const auto& x : col) zero_col = zero_col && eq_scalar(x, T(0), tol);
        if (zero_col) {
            sink.add(MistakeCode::NotEigenpair, {"p", {i + 1}},
                     "column " + std::to_string(i + 1) + " is zero, not an eigenvector");
            continue;
        }
        std::vector<T> ap = matvec(a, col);
        std::vector<T> lp = scale(col, d(i, i));
        bool eigenpair;
        if constexpr (is_float_claim<T>) {
            double scale_hint = std::max({1.0, frobenius_norm(a) * std::sqrt(dot(col, col))});
            double diff = 0;
            for (std::size_t k = 0; k < ap.size(); ++k) diff += (ap[k] - lp[k]) * (ap[k] - lp[k]);
            eigenpair = std::sqrt(diff) <= tol * scale_hint;
        } else {
            eigenpair = ap == lp;
        }
        if (!eigenpair) {
            sink.add(MistakeCode::NotEigenpair, {"p", {i + 1}},
                     "A*p_" + std::to_string(i + 1) + " = " + render_vec(ap) + " but " +
                         render_scalar(d(i, i)) + "*p_" + std::to_string(i + 1) + " = " +
                         render_vec(lp));
            continue;
        }
        if (want_unit) {
            T nsq = norm_squared(col);
            if (!eq_scalar(nsq, T(1), tol))
                sink.add(MistakeCode::UnnormalizedColumns, {"p", {i + 1}},
                         "column " + std::to_string(i + 1) +
                             " is a correct eigenvector direction but has squared norm " +
                             render_scalar(nsq));
        }
    }
}

/// Pairwise column orthogonality; offending pairs sharing a diagonal value
/// point at a skipped in-eigenspace Gram-Schmidt, others at the transpose
/// shortcut.
template <typename T, typename SameGroup>
void check_pair_orthogonality(const Matrix<T>& q, const std::string& name, SameGroup same_group,
                              double tol, FindingSink& sink) {
    for (int i = 0; i < q.cols(); ++i)
        for (int j = i + 1; j < q.cols(); ++j) {
            T ip = dot(q.column(i), q.column(j));
            if (eq_scalar(ip, T(0), tol)) continue;
            MistakeCode code = same_group(i, j) ? MistakeCode::NonOrthogonalEigenspace
                                                : MistakeCode::TransposeIsNotInverse;
            sink.add(code, {name, {i + 1, j + 1}},
                     "<" + name + "_" + std::to_string(i + 1) + ", " + name + "_" +
                         std::to_string(j + 1) + "> = " + render_scalar(ip));
        }
}

template <typename T>
void check_unit_columns(const Matrix<T>& q, const std::string& name, double tol, FindingSink& sink) {
    for (int i = 0; i < q.cols(); ++i) {
        T nsq = norm_squared(q.column(i));
        if (!eq_scalar(nsq, T(1), tol))
            sink.add(MistakeCode::UnnormalizedColumns, {name, {i + 1}},
                     "column " + std::to_string(i + 1) + " of " + name + " has squared norm " +
                         render_scalar(nsq));
    }
}

inline bool multiset_matches(std::vector<double> claimed, std::vector<double> truth, double tol) {
    if (claimed.size() != truth.size()) return false;
    std::sort(claimed.begin(), claimed.end(), std::greater<>());
    std::sort(truth.begin(), truth.end(), std::greater<>());
    for (std::size_t i = 0; i < claimed.size(); ++i)
        if (std::fabs(claimed[i] - truth[i]) > tol * std::max(1.0, std::fabs(truth[i])))
            return false;
    return true;
}

inline std::string render_float_list(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace detail

/// Verifies A = P D P^-1. Checks, in order: D diagonal, P invertible, the
/// per-column eigenpair equations, the reconstruction product, and (when
/// supplied) P * p_inv = I. Rational claims compare exactly; float claims
/// use opts.tol.
template <typename T>
Diagnosis check_diagonalization(const DiagonalizationClaim<T>& claim, const CheckOptions& opts = {}) {
    static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, double>,
                  "diagonalization claims are rational or float");
    const int n = claim.a.rows();
    if (!claim.a.is_square() || claim.p.rows() != n || claim.p.cols() != n ||
        claim.d.rows() != n || claim.d.cols() != n ||
        (claim.p_inv && (claim.p_inv->rows() != n || claim.p_inv->cols() != n)))
        throw DimensionMismatch("diagonalization claim shapes must all be n x n");

    detail::FindingSink sink;
    detail::check_diagonal_factor(claim.d, "d", opts.tol, sink);

    std::optional<Matrix<T>> p_inverse;
    try {
        if constexpr (detail::is_float_claim<T>) {
            p_inverse = float_inverse(claim.p);
        } else {
            p_inverse = inverse(claim.p);
        }
    } catch (const SingularMatrix&) {
        sink.add(MistakeCode::ReconstructionMismatch, {"p", {}},
                 "p is singular, so P D P^-1 does not exist");
    }

    detail::check_eigenpairs(claim.a, claim.p, claim.d, /*want_unit=*/false, opts.tol, sink);

    if (p_inverse) {
        Matrix<T> recon = matmul(matmul(claim.p, claim.d), *p_inverse);
        if (!detail::eq_matrix(recon, claim.a, opts.tol))
            sink.add(MistakeCode::ReconstructionMismatch, {"product", {}},
                     "P D P^-1 does not reproduce the source matrix");
    }
    if (claim.p_inv) {
        Matrix<T> prod = matmul(claim.p, *claim.p_inv);
        if (!detail::eq_matrix(prod, Matrix<T>::identity(n), opts.tol))
            sink.add(MistakeCode::ReconstructionMismatch, {"p_inv", {}},
                     "claimed p_inv is not the inverse of p");
    }

    Diagnosis out;
    out.findings = std::move(sink.findings);
    out.verdict = out.findings.empty() ? Verdict::Valid : Verdict::Invalid;
    if constexpr (detail::is_float_claim<T>) {
        std::vector<FactorSpec> factors = {{"p", claim.p, false, false},
                                           {"d", claim.d, false, false}};
        if (p_inverse) factors.push_back({"p_inv", *p_inverse, false, false});
        if (p_inverse) out.residuals = numeric_verify(claim.a, factors);
    }
    return out;
}

/// Verifies A = P D P^T for symmetric A. Adds to the diagonalization
/// checks: symmetry of A, per-column unit norms (UNNORMALIZED_COLUMNS when
/// the direction is right), and pairwise orthogonality with the
/// same-eigenvalue refinement.
template <typename T>
Diagnosis check_orthogonal_diagonalization(const OrthogonalDiagonalizationClaim<T>& claim,
                                           const CheckOptions& opts = {}) {
    const int n = claim.a.rows();
    if (!claim.a.is_square() || claim.p.rows() != n || claim.p.cols() != n ||
        claim.d.rows() != n || claim.d.cols() != n)
        throw DimensionMismatch("orthogonal diagonalization claim shapes must all be n x n");

    detail::FindingSink sink;
    bool symmetric;
    if constexpr (detail::is_float_claim<T>) {
        symmetric = detail::eq_matrix(claim.a, transpose(claim.a), opts.tol);
    } else {
        symmetric = is_symmetric(claim.a);
    }
    if (!symmetric)
        sink.add(MistakeCode::NotSymmetricInput, {"a", {}},
                 "orthogonal diagonalization requires a symmetric source matrix");

    detail::check_diagonal_factor(claim.d, "d", opts.tol, sink);
    detail::check_eigenpairs(claim.a, claim.p, claim.d, /*want_unit=*/true, opts.tol, sink);
    detail::check_pair_orthogonality(
        claim.p, "p",
        [&](int i, int j) { return detail::eq_scalar(claim.d(i, i), claim.d(j, j), opts.tol); },
        opts.tol, sink);

    Matrix<T> recon = matmul(matmul(claim.p, claim.d), transpose(claim.p));
    if (!detail::eq_matrix(recon, claim.a, opts.tol))
        sink.add(MistakeCode::ReconstructionMismatch, {"product", {}},
                 "P D P^T does not reproduce the source matrix");

    Diagnosis out;
    out.findings = std::move(sink.findings);
    out.verdict = out.findings.empty() ? Verdict::Valid : Verdict::Invalid;
    if constexpr (detail::is_float_claim<T>) {
        out.residuals = numeric_verify(
            claim.a, {{"p", claim.p, false, true}, {"d", claim.d, false, false},
                      {"p^T", claim.p, true, false}});
    }
    return out;
}

namespace detail {

/// The singular values of M, exact when the Gram spectrum resolves in the
/// rational field, numeric otherwise.
inline std::pair<std::vector<double>, std::string> true_singular_values(const Matrix<Rational>& m) {
    try {
        Svd s = svd(m, SvdMode::Reduced);
        std::vector<double> out;
        std::string rendered = "[";
        auto sigmas = s.singular_values();
        for (std::size_t i = 0; i < sigmas.size(); ++i) {
            out.push_back(to_double(sigmas[i]));
            rendered += (i ? ", " : "") + to_string(sigmas[i]);
        }
        for (int i = s.rank; i < std::min(m.rows(), m.cols()); ++i) {
            out.push_back(0.0);
            rendered += (out.size() > 1 ? ", 0" : "0");
        }
        return {out, rendered + "]"};
    } catch (const IrrationalGramSpectrum&) {
        NumericSvd s = numeric_svd(to_float(m));
        auto out = s.singular_values();
        return {out, render_float_list(out)};
    }
}

inline std::pair<std::vector<double>, std::string> true_singular_values(const Matrix<double>& m) {
    NumericSvd s = numeric_svd(m);
    auto out = s.singular_values();
    return {out, render_float_list(out)};
}

inline std::pair<std::vector<double>, std::string> true_singular_values(const Matrix<RadicalSum>& m) {
    // Round-trip claims carry an exact rational matrix promoted into the
    // radical field; anything genuinely radical is handled numerically.
    Matrix<Rational> rat(m.rows(), m.cols());
    bool rational = true;
    for (int r = 0; r < m.rows() && rational; ++r)
        for (int c = 0; c < m.cols() && rational; ++c) {
            if (m(r, c).is_rational())
                rat(r, c) = m(r, c).rational_value();
            else
                rational = false;
        }
    if (rational) return true_singular_values(rat);
    NumericSvd s = numeric_svd(to_float(m));
    auto out = s.singular_values();
    return {out, render_float_list(out)};
}

/// Absolute eigenvalues of a square M when its exact spectrum resolves;
/// nullopt otherwise. Used to fingerprint the wrong-Gram-matrix mistake.
template <typename T>
std::optional<std::vector<double>> absolute_eigenvalues(const Matrix<T>& m) {
    if (!m.is_square()) return std::nullopt;
    Matrix<Rational> rat(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if constexpr (std::is_same_v<T, Rational>) {
                rat(r, c) = m(r, c);
            } else if constexpr (std::is_same_v<T, RadicalSum>) {
                if (!m(r, c).is_rational()) return std::nullopt;
                rat(r, c) = m(r, c).rational_value();
            } else {
                // Floats: recover exactness only for integer-valued entries.
                if (m(r, c) != std::floor(m(r, c)) || std::fabs(m(r, c)) > 1e15) return std::nullopt;
                rat(r, c) = Rational(BigInt(static_cast<long long>(m(r, c))));
            }
        }
    try {
        Spectrum spec = resolve_spectrum(characteristic_polynomial(rat));
        std::vector<double> out;
        for (const auto& entry : spec)
            for (int i = 0; i < entry.multiplicity; ++i) out.push_back(std::fabs(to_double(entry.value)));
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace detail

/// Verifies M = U Sigma V^T against the asserted mode. Checks, in order:
/// factor shapes (REDUCED_AS_FULL / MISSING_COMPLETION / shape findings),
/// sigma structure and ordering, U and V orthonormality, the sigma multiset
/// against the singular values of M (with the wrong-Gram fingerprint), and
/// the reconstruction product.
template <typename T>
Diagnosis check_svd(const SvdClaim<T>& claim, const CheckOptions& opts = {}) {
    const int m_rows = claim.m.rows(), m_cols = claim.m.cols();
    if (claim.u.rows() != m_rows || claim.v.rows() != m_cols)
        throw DimensionMismatch("svd claim: U must have m rows and V must have n rows");
    const int ku = claim.u.cols(), kv = claim.v.cols();
    const int sr = claim.sigma.rows(), sc = claim.sigma.cols();

    detail::FindingSink sink;
    bool conformable = (sr == ku && sc == kv);

    if (claim.asserted_mode == SvdMode::Full) {
        bool proper_full = (ku == m_rows && kv == m_cols && sr == m_rows && sc == m_cols);
        bool reduced_shaped = (sr == sc && sr == ku && kv == ku && ku < std::max(m_rows, m_cols));
        if (!proper_full) {
            if (reduced_shaped) {
                sink.add(MistakeCode::ReducedAsFull, {"u", {}},
                         "claim asserted full SVD but factors have reduced shapes: U is " +
                             std::to_string(m_rows) + "x" + std::to_string(ku) + ", Sigma " +
                             std::to_string(sr) + "x" + std::to_string(sc));
            } else if (sr == m_rows && sc == m_cols) {
                if (ku < m_rows)
                    sink.add(MistakeCode::MissingCompletion, {"u", {}},
                             "U supplies " + std::to_string(ku) + " of the " +
                                 std::to_string(m_rows) + " orthonormal columns a full SVD needs");
                if (kv < m_cols)
                    sink.add(MistakeCode::MissingCompletion, {"v", {}},
                             "V supplies " + std::to_string(kv) + " of the " +
                                 std::to_string(m_cols) + " orthonormal columns a full SVD needs");
            } else {
                sink.add(MistakeCode::SigmaShapeMismatch, {"sigma", {}},
                         "Sigma is " + std::to_string(sr) + "x" + std::to_string(sc) +
                             " but a full SVD of an " + std::to_string(m_rows) + "x" +
                             std::to_string(m_cols) + " matrix needs exactly that shape");
            }
        }
    } else {
        if (!conformable)
            sink.add(MistakeCode::SigmaShapeMismatch, {"sigma", {}},
                     "reduced SVD needs Sigma shaped " + std::to_string(ku) + "x" +
                         std::to_string(kv) + " to match U and V, got " + std::to_string(sr) + "x" +
                         std::to_string(sc));
    }

    detail::check_diagonal_factor(claim.sigma, "sigma", opts.tol, sink);

    const int diag_len = std::min(sr, sc);
    std::vector<T> sigma_diag;
    for (int i = 0; i < diag_len; ++i) sigma_diag.push_back(claim.sigma(i, i));

    auto sigma_float = [&](int i) { return to_double(sigma_diag[i]); };
    for (int i = 0; i < diag_len; ++i) {
        double x = sigma_float(i);
        if (x < 0)
            sink.add(MistakeCode::SigmaNegative, {"sigma", {i + 1}},
                     "sigma_" + std::to_string(i + 1) + " = " + detail::render_scalar(sigma_diag[i]) +
                         " is negative");
        if (claim.asserted_mode == SvdMode::Reduced && x == 0)
            sink.add(MistakeCode::SigmaNegative, {"sigma", {i + 1}},
                     "sigma_" + std::to_string(i + 1) +
                         " = 0, but a reduced SVD keeps only positive singular values");
    }
    for (int i = 0; i + 1 < diag_len; ++i)
        if (sigma_float(i) < sigma_float(i + 1))
            sink.add(MistakeCode::SigmaNotDescending, {"sigma", {i + 1, i + 2}},
                     "sigma_" + std::to_string(i + 1) + " = " + detail::render_scalar(sigma_diag[i]) +
                         " < sigma_" + std::to_string(i + 2) + " = " +
                         detail::render_scalar(sigma_diag[i + 1]));

    detail::check_unit_columns(claim.u, "u", opts.tol, sink);
    detail::check_unit_columns(claim.v, "v", opts.tol, sink);
    auto same_sigma = [&](int i, int j) {
        double si = i < diag_len ? sigma_float(i) : 0.0;
        double sj = j < diag_len ? sigma_float(j) : 0.0;
        return std::fabs(si - sj) <= opts.tol * std::max(1.0, std::fabs(si));
    };
    detail::check_pair_orthogonality(claim.u, "u", same_sigma, opts.tol, sink);
    detail::check_pair_orthogonality(claim.v, "v", same_sigma, opts.tol, sink);

    // Sigma multiset against the singular values of M.
    auto [truth, truth_rendered] = detail::true_singular_values(claim.m);
    std::vector<double> claimed;
    for (int i = 0; i < diag_len; ++i) claimed.push_back(sigma_float(i));
    std::vector<double> truth_nonzero, claimed_nonzero;
    for (double x : truth)
        if (x > 0) truth_nonzero.push_back(x);
    for (double x : claimed)
        if (x != 0) claimed_nonzero.push_back(x);
    double sigma_tol = detail::is_float_claim<T> ? opts.tol : 1e-12;
    if (!detail::multiset_matches(claimed_nonzero, truth_nonzero, sigma_tol)) {
        std::string claimed_rendered = detail::render_float_list(claimed);
        bool fingerprinted = false;
        if (auto eigs = detail::absolute_eigenvalues(claim.m)) {
            std::vector<double> sqrt_eigs;
            for (double x : *eigs) sqrt_eigs.push_back(std::sqrt(x));
            auto drop_zeros = [](std::vector<double> xs) {
                xs.erase(std::remove(xs.begin(), xs.end(), 0.0), xs.end());
                return xs;
            };
            if (detail::multiset_matches(claimed_nonzero, drop_zeros(*eigs), 1e-6)) {
                sink.add(MistakeCode::WrongGramMatrix, {"sigma", {}},
                         "claimed sigma " + claimed_rendered +
                             " are the eigenvalues of M itself; the singular values come from "
                             "M^T M and are " +
                             truth_rendered);
                fingerprinted = true;
            } else if (detail::multiset_matches(claimed_nonzero, drop_zeros(sqrt_eigs), 1e-6)) {
                sink.add(MistakeCode::WrongGramMatrix, {"sigma", {}},
                         "claimed sigma " + claimed_rendered +
                             " are sqrt|eigenvalues of M|; the singular values come from M^T M "
                             "and are " +
                             truth_rendered);
                fingerprinted = true;
            }
        }
        if (!fingerprinted)
            sink.add(MistakeCode::ReconstructionMismatch, {"sigma", {}},
                     "claimed sigma " + detail::render_float_list(claimed) +
                         " do not match the singular values of M = " + truth_rendered);
    }

    if (conformable) {
        Matrix<T> recon = matmul(matmul(claim.u, claim.sigma), transpose(claim.v));
        if (!detail::eq_matrix(recon, claim.m, opts.tol))
            sink.add(MistakeCode::ReconstructionMismatch, {"product", {}},
                     "U Sigma V^T does not reproduce the source matrix");
    }

    Diagnosis out;
    out.findings = std::move(sink.findings);
    out.verdict = out.findings.empty() ? Verdict::Valid : Verdict::Invalid;
    if constexpr (detail::is_float_claim<T>) {
        if (conformable)
            out.residuals = numeric_verify(claim.m, {{"u", claim.u, false, true},
                                                     {"sigma", claim.sigma, false, false},
                                                     {"v", claim.v, true, true}});
    }
    return out;
}

}  // namespace exfact

#endif  // EXFACT_DIAGNOSE_HPP
