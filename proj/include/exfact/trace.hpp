#ifndef EXFACT_TRACE_HPP
#define EXFACT_TRACE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exfact/factorize.hpp"
#include "exfact/numeric.hpp"

namespace exfact {

enum class StepKind {
    Input,
    CharPoly,
    Eigenvalues,
    Eigenvectors,
    GramSchmidt,
    Normalize,
    SingularValues,
    AssembleFactor,
    Completion,
    Inverse,
    Verify,
    Fallback,
};

inline std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Input: return "input";
        case StepKind::CharPoly: return "charpoly";
        case StepKind::Eigenvalues: return "eigenvalues";
        case StepKind::Eigenvectors: return "eigenvectors";
        case StepKind::GramSchmidt: return "gram_schmidt";
        case StepKind::Normalize: return "normalize";
        case StepKind::SingularValues: return "singular_values";
        case StepKind::AssembleFactor: return "assemble_factor";
        case StepKind::Completion: return "completion";
        case StepKind::Inverse: return "inverse";
        case StepKind::Verify: return "verify";
        case StepKind::Fallback: return "fallback";
    }
    return "unknown";
}

using AnyScalar = std::variant<Rational, RadicalSum, QuadRational, double>;
using AnyVector = std::variant<std::vector<Rational>, std::vector<RadicalSum>,
                               std::vector<QuadRational>, std::vector<double>>;
using AnyMatrix =
    std::variant<Matrix<Rational>, Matrix<RadicalSum>, Matrix<QuadRational>, Matrix<double>>;

/// A list of vectors with explicit orientation (the JSON schema stores
/// column_vectors rather than leaving orientation implied).
struct VectorList {
    std::vector<AnyVector> vectors;
    bool column_vectors = true;
};

using PayloadValue = std::variant<AnyScalar, AnyVector, AnyMatrix, VectorList, CharPoly, std::string>;

/// One derivation step: a kind, named payload values in insertion order, and
/// a short rendered note.
struct Step {
    StepKind kind;
    std::vector<std::pair<std::string, PayloadValue>> payload;
    std::string note;

    Step(StepKind k, std::string n = "") : kind(k), note(std::move(n)) {}

    Step& with(std::string name, PayloadValue value) {
        payload.emplace_back(std::move(name), std::move(value));
        return *this;
    }

    const PayloadValue* find(const std::string& name) const {
        for (const auto& [key, value] : payload)
            if (key == name) return &value;
        return nullptr;
    }
};

struct Trace {
    std::vector<Step> steps;

    Step& add(Step step) {
        steps.push_back(std::move(step));
        return steps.back();
    }

    const Step* first_of(StepKind kind) const {
        for (const auto& s : steps)
            if (s.kind == kind) return &s;
        return nullptr;
    }
};

enum class EngineMode { Exact, Numeric, Auto };

namespace detail {

inline AnyScalar eigenvalue_payload(const Eigenvalue& e) {
    if (is_rational(e)) return std::get<Rational>(e);
    return std::get<QuadRational>(e);
}

inline void add_eigenvalue_steps(Trace& trace, const Eigensystem& es, const std::string& subject) {
    Step ev(StepKind::Eigenvalues, "Eigenvalues of " + subject + ", descending with multiplicity.");
    int index = 1;
    for (const auto& entry : es)
        for (int i = 0; i < entry.algebraic_multiplicity; ++i)
            ev.with("lambda" + std::to_string(index++), eigenvalue_payload(entry.value));
    trace.add(std::move(ev));

    Step vecs(StepKind::Eigenvectors,
              "Eigenvalue, eigenspace basis, and geometric multiplicity for " + subject + ".");
    int k = 1;
    for (const auto& entry : es) {
        vecs.with("eigenvalue" + std::to_string(k), eigenvalue_payload(entry.value));
        VectorList basis;
        for (const auto& v : entry.rational_basis) basis.vectors.push_back(v);
        for (const auto& v : entry.quadratic_basis) basis.vectors.push_back(v);
        vecs.with("basis" + std::to_string(k), std::move(basis));
        ++k;
    }
    trace.add(std::move(vecs));
}

inline void add_gram_schmidt_steps(Trace& trace, const Eigensystem& es) {
    for (const auto& entry : es) {
        if (entry.rational_basis.size() < 2) continue;
        VectorList before, after;
        for (const auto& v : entry.rational_basis) before.vectors.push_back(v);
        for (const auto& v : gram_schmidt(entry.rational_basis)) after.vectors.push_back(v);
        trace.add(Step(StepKind::GramSchmidt,
                       "Eigenspace of " + to_string(entry.value) +
                           " is multidimensional; orthogonalized by sequential projection.")
                      .with("eigenvalue", eigenvalue_payload(entry.value))
                      .with("input", std::move(before))
                      .with("output", std::move(after)));
    }
}

inline void add_normalize_step(Trace& trace, const Matrix<RadicalSum>& p) {
    Step st(StepKind::Normalize, "Columns scaled to unit length.");
    for (int c = 0; c < p.cols(); ++c) st.with("p" + std::to_string(c + 1), p.column(c));
    trace.add(std::move(st));
}

// -- numeric continuations ---------------------------------------------------

inline void numeric_eigen_steps(Trace& trace, const Matrix<double>& a, const NumericOptions& opts) {
    JacobiResult eig = jacobi_symmetric_eig(a, opts);
    Step ev(StepKind::Eigenvalues, "Numeric eigenvalues (cyclic Jacobi), descending.");
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
        ev.with("lambda" + std::to_string(i + 1), AnyScalar(eig.eigenvalues[i]));
    trace.add(std::move(ev));
    Step vecs(StepKind::Eigenvectors, "Orthonormal eigenvector columns.");
    VectorList cols;
    for (int c = 0; c < eig.q.cols(); ++c) cols.vectors.push_back(eig.q.column(c));
    vecs.with("basis", std::move(cols));
    trace.add(std::move(vecs));
    Matrix<double> recon =
        matmul(matmul(eig.q, Matrix<double>::diagonal(eig.eigenvalues)), transpose(eig.q));
    double denom = std::max(frobenius_norm(a), 1e-300);
    trace.add(Step(StepKind::Verify, "Residuals of Q diag(lambda) Q^T against the input.")
                  .with("reconstruction_residual", AnyScalar(frobenius_norm(recon - a) / denom))
                  .with("orthogonality_residual",
                        AnyScalar(frobenius_norm(matmul(transpose(eig.q), eig.q) -
                                                 Matrix<double>::identity(a.rows())))));
}

inline void numeric_orthdiag_steps(Trace& trace, const Matrix<double>& a,
                                   const NumericOptions& opts) {
    JacobiResult eig = jacobi_symmetric_eig(a, opts);
    Step ev(StepKind::Eigenvalues, "Numeric eigenvalues (cyclic Jacobi), descending.");
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i)
        ev.with("lambda" + std::to_string(i + 1), AnyScalar(eig.eigenvalues[i]));
    trace.add(std::move(ev));
    trace.add(Step(StepKind::AssembleFactor, "Diagonal factor from the eigenvalues.")
                  .with("D", AnyMatrix(Matrix<double>::diagonal(eig.eigenvalues))));
    trace.add(Step(StepKind::AssembleFactor, "Orthogonal factor from the Jacobi rotations.")
                  .with("P", AnyMatrix(eig.q)));
    ResidualReport rep = numeric_verify(
        a, {{"P", eig.q, false, true},
            {"D", Matrix<double>::diagonal(eig.eigenvalues), false, false},
            {"P^T", eig.q, true, false}},
        opts);
    Step verify(StepKind::Verify, "Residuals of P D P^T against the input.");
    verify.with("reconstruction_residual", AnyScalar(rep.reconstruction));
    for (const auto& [name, value] : rep.orthogonality)
        verify.with("orthogonality_residual_" + name, AnyScalar(value));
    trace.add(std::move(verify));
}

inline void numeric_svd_steps(Trace& trace, const Matrix<double>& m, const NumericOptions& opts) {
    NumericSvd s = numeric_svd(m, opts);
    Step sv(StepKind::SingularValues, "Numeric singular values, descending.");
    auto sigmas = s.singular_values();
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        sv.with("sigma" + std::to_string(i + 1), AnyScalar(sigmas[i]));
    trace.add(std::move(sv));
    trace.add(Step(StepKind::AssembleFactor, "Right singular vectors.").with("V", AnyMatrix(s.v)));
    trace.add(Step(StepKind::AssembleFactor, "Singular value matrix, shaped like the input.")
                  .with("Sigma", AnyMatrix(s.sigma)));
    trace.add(Step(StepKind::AssembleFactor, "Left singular vectors.").with("U", AnyMatrix(s.u)));
    ResidualReport rep = numeric_verify(m,
                                        {{"U", s.u, false, true},
                                         {"Sigma", s.sigma, false, false},
                                         {"V", s.v, true, true}},
                                        opts);
    Step verify(StepKind::Verify, "Residuals of U Sigma V^T against the input.");
    verify.with("reconstruction_residual", AnyScalar(rep.reconstruction));
    for (const auto& [name, value] : rep.orthogonality)
        verify.with("orthogonality_residual_" + name, AnyScalar(value));
    trace.add(std::move(verify));
}

inline void numeric_pinv_steps(Trace& trace, const Matrix<double>& m, const NumericOptions& opts) {
    NumericSvd s = numeric_svd(m, opts);
    Step sv(StepKind::SingularValues, "Numeric singular values, descending.");
    auto sigmas = s.singular_values();
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        sv.with("sigma" + std::to_string(i + 1), AnyScalar(sigmas[i]));
    trace.add(std::move(sv));
    // Reduced factors: keep the rank columns.
    std::vector<std::vector<double>> u_cols, v_cols;
    std::vector<double> d_inv;
    for (int i = 0; i < s.rank; ++i) {
        u_cols.push_back(s.u.column(i));
        v_cols.push_back(s.v.column(i));
        d_inv.push_back(1.0 / s.sigma(i, i));
    }
    Matrix<double> ur = Matrix<double>::from_columns(u_cols, m.rows());
    Matrix<double> vr = Matrix<double>::from_columns(v_cols, m.cols());
    Matrix<double> pinv = matmul(matmul(vr, Matrix<double>::diagonal(d_inv)), transpose(ur));
    trace.add(Step(StepKind::Inverse, "Inverted the positive singular values.")
                  .with("D^-1", AnyMatrix(Matrix<double>::diagonal(d_inv))));
    trace.add(Step(StepKind::AssembleFactor, "Pseudoinverse V D^-1 U^T from the reduced factors.")
                  .with("M^+", AnyMatrix(pinv)));
    Matrix<double> mpm = matmul(matmul(m, pinv), m);
    double denom = std::max(frobenius_norm(m), 1e-300);
    trace.add(Step(StepKind::Verify, "Penrose residual of M M^+ M against M.")
                  .with("reconstruction_residual", AnyScalar(frobenius_norm(mpm - m) / denom)));
}

inline void add_fallback_step(Trace& trace, const std::string& reason) {
    trace.add(Step(StepKind::Fallback,
                   "Exact computation is unavailable; continuing in floating point.")
                  .with("reason", reason));
}

}  // namespace detail

/// Eigensystem report. Auto mode falls back to the numeric eigensolver for
/// symmetric matrices whose spectrum leaves the tower.
inline Trace trace_eigensystem(const Matrix<Rational>& a, EngineMode mode,
                               const NumericOptions& opts = {}) {
    Trace trace;
    trace.add(Step(StepKind::Input, "Source matrix.").with("A", AnyMatrix(a)));
    if (mode == EngineMode::Numeric) {
        detail::numeric_eigen_steps(trace, to_float(a), opts);
        return trace;
    }
    CharPoly p = characteristic_polynomial(a);
    trace.add(Step(StepKind::CharPoly, "Characteristic polynomial of A.").with("p", p));
    try {
        Eigensystem es = eigensystem(a);
        detail::add_eigenvalue_steps(trace, es, "A");
        trace.add(Step(StepKind::Verify, "A*v = lambda*v holds exactly for every basis vector."));
        return trace;
    } catch (const UnsupportedSpectrum& e) {
        if (mode != EngineMode::Auto || !is_symmetric(a)) throw;
        detail::add_fallback_step(trace, e.what());
        detail::numeric_eigen_steps(trace, to_float(a), opts);
        return trace;
    }
}

/// Diagonalization A = P D P^-1. Defective inputs never fall back (there is
/// nothing numeric to fall back to); irrational spectra fall back only for
/// symmetric matrices, where Jacobi provides the factorization.
inline Trace trace_diagonalize(const Matrix<Rational>& a, EngineMode mode,
                               const NumericOptions& opts = {}) {
    Trace trace;
    trace.add(Step(StepKind::Input, "Source matrix.").with("A", AnyMatrix(a)));
    if (mode == EngineMode::Numeric) {
        if (!is_symmetric(a))
            throw NotSymmetric("numeric diagonalization is only available for symmetric matrices");
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    }
    CharPoly p = characteristic_polynomial(a);
    trace.add(Step(StepKind::CharPoly, "Characteristic polynomial of A.").with("p", p));
    try {
        Eigensystem es = eigensystem(a);
        detail::add_eigenvalue_steps(trace, es, "A");
        Diagonalization d = diagonalize(a);
        trace.add(Step(StepKind::AssembleFactor, "Diagonal factor in spectrum order.")
                      .with("D", AnyMatrix(d.d)));
        trace.add(Step(StepKind::AssembleFactor, "Eigenvector columns in matching order.")
                      .with("P", AnyMatrix(d.p)));
        trace.add(Step(StepKind::Inverse, "Exact inverse of P.").with("P^-1", AnyMatrix(d.p_inv)));
        trace.add(Step(StepKind::Verify, "P D P^-1 reproduces A exactly.")
                      .with("product", AnyMatrix(matmul(matmul(d.p, d.d), d.p_inv))));
        return trace;
    } catch (const IrrationalSpectrum& e) {
        if (mode != EngineMode::Auto || !is_symmetric(a)) throw;
        detail::add_fallback_step(trace, e.what());
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    } catch (const UnsupportedSpectrum& e) {
        if (mode != EngineMode::Auto || !is_symmetric(a)) throw;
        detail::add_fallback_step(trace, e.what());
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    }
}

/// Orthogonal diagonalization A = P D P^T for symmetric A, with the exact
/// eigensystem reported even when the assembly must fall back to numerics.
inline Trace trace_orthogonal_diagonalize(const Matrix<Rational>& a, EngineMode mode,
                                          const NumericOptions& opts = {}) {
    if (!is_symmetric(a)) throw NotSymmetric("orthogonal_diagonalize: matrix is not symmetric");
    Trace trace;
    trace.add(Step(StepKind::Input, "Source matrix.").with("A", AnyMatrix(a)));
    if (mode == EngineMode::Numeric) {
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    }
    CharPoly p = characteristic_polynomial(a);
    trace.add(Step(StepKind::CharPoly, "Characteristic polynomial of A.").with("p", p));
    Eigensystem es;
    try {
        es = eigensystem(a);
    } catch (const UnsupportedSpectrum& e) {
        if (mode != EngineMode::Auto) throw;
        detail::add_fallback_step(trace, e.what());
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    }
    detail::add_eigenvalue_steps(trace, es, "A");
    if (!spectrum_is_rational(detail::spectrum_of(es))) {
        IrrationalSpectrum err("symmetric matrix has irrational eigenvalues",
                               detail::spectrum_of(es));
        if (mode != EngineMode::Auto) throw err;
        detail::add_fallback_step(trace, err.what());
        detail::numeric_orthdiag_steps(trace, to_float(a), opts);
        return trace;
    }
    detail::add_gram_schmidt_steps(trace, es);
    OrthogonalDiagonalization od = orthogonal_diagonalize(a);
    detail::add_normalize_step(trace, od.p);
    trace.add(Step(StepKind::AssembleFactor, "Diagonal factor in spectrum order.")
                  .with("D", AnyMatrix(od.d)));
    trace.add(Step(StepKind::AssembleFactor, "Orthonormal eigenvector columns.")
                  .with("P", AnyMatrix(od.p)));
    trace.add(Step(StepKind::Verify, "P^T P = I and P D P^T = A hold exactly.")
                  .with("product",
                        AnyMatrix(matmul(matmul(od.p, to_radical(od.d)), transpose(od.p)))));
    return trace;
}

/// SVD through the Gram matrix, full or reduced.
inline Trace trace_svd(const Matrix<Rational>& m, SvdMode svd_mode, EngineMode mode,
                       const NumericOptions& opts = {}) {
    Trace trace;
    trace.add(Step(StepKind::Input, "Source matrix.").with("M", AnyMatrix(m)));
    if (mode == EngineMode::Numeric) {
        detail::numeric_svd_steps(trace, to_float(m), opts);
        return trace;
    }
    Matrix<Rational> gram = matmul(transpose(m), m);
    CharPoly p = characteristic_polynomial(gram);
    trace.add(Step(StepKind::CharPoly, "Characteristic polynomial of the Gram matrix M^T M.")
                  .with("gram", AnyMatrix(gram))
                  .with("p", p));
    Svd s{};
    try {
        Eigensystem es = eigensystem(gram);
        if (!spectrum_is_rational(detail::spectrum_of(es)))
            throw IrrationalGramSpectrum("gram matrix has irrational eigenvalues");
        detail::add_eigenvalue_steps(trace, es, "M^T M");
        detail::add_gram_schmidt_steps(trace, es);
        s = svd(m, svd_mode);
    } catch (const UnsupportedSpectrum& e) {
        if (mode != EngineMode::Auto) throw IrrationalGramSpectrum(e.what());
        detail::add_fallback_step(trace, e.what());
        detail::numeric_svd_steps(trace, to_float(m), opts);
        return trace;
    } catch (const IrrationalGramSpectrum& e) {
        if (mode != EngineMode::Auto) throw;
        detail::add_fallback_step(trace, e.what());
        detail::numeric_svd_steps(trace, to_float(m), opts);
        return trace;
    }
    Step sv(StepKind::SingularValues,
            "Singular values are the square roots of the Gram eigenvalues.");
    auto sigmas = s.singular_values();
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        sv.with("sigma" + std::to_string(i + 1), AnyScalar(RadicalSum(sigmas[i])));
    if (s.rank == 0) sv.note += " Rank is zero: the factorization is degenerate.";
    trace.add(std::move(sv));
    trace.add(Step(StepKind::Normalize, "Normalized Gram eigenvectors form V.")
                  .with("V", AnyMatrix(s.v)));
    trace.add(Step(StepKind::AssembleFactor, "Right singular vectors.").with("V", AnyMatrix(s.v)));
    trace.add(Step(StepKind::AssembleFactor,
                   svd_mode == SvdMode::Full
                       ? "Singular value matrix, shaped like the input."
                       : "Positive diagonal of the reduced factorization.")
                  .with("Sigma", AnyMatrix(s.sigma)));
    if (svd_mode == SvdMode::Full && s.rank < m.rows()) {
        Step comp(StepKind::Completion,
                  "Columns beyond the rank complete U to an orthonormal basis.");
        for (int c = s.rank; c < s.u.cols(); ++c)
            comp.with("u" + std::to_string(c + 1), AnyVector(s.u.column(c)));
        trace.add(std::move(comp));
    }
    trace.add(Step(StepKind::AssembleFactor,
                   "Left singular vectors via u_i = (1/sigma_i) M v_i" +
                       std::string(svd_mode == SvdMode::Full && s.rank < m.rows()
                                       ? ", plus the completion columns."
                                       : "."))
                  .with("U", AnyMatrix(s.u)));
    trace.add(Step(StepKind::Verify,
                   svd_mode == SvdMode::Full ? "U^T U = I, V^T V = I and U Sigma V^T = M exactly."
                                             : "U^T U = I, V^T V = I and U D V^T = M exactly.")
                  .with("product", AnyMatrix(matmul(matmul(s.u, s.sigma), transpose(s.v)))));
    return trace;
}

/// Pseudoinverse via the reduced SVD: M^+ = V D^-1 U^T.
inline Trace trace_pseudoinverse(const Matrix<Rational>& m, EngineMode mode,
                                 const NumericOptions& opts = {}) {
    Trace trace;
    trace.add(Step(StepKind::Input, "Source matrix.").with("M", AnyMatrix(m)));
    if (mode == EngineMode::Numeric) {
        detail::numeric_pinv_steps(trace, to_float(m), opts);
        return trace;
    }
    Svd s{};
    try {
        s = svd(m, SvdMode::Reduced);
    } catch (const IrrationalGramSpectrum& e) {
        if (mode != EngineMode::Auto) throw;
        trace.add(Step(StepKind::CharPoly, "Characteristic polynomial of the Gram matrix M^T M.")
                      .with("p", characteristic_polynomial(matmul(transpose(m), m))));
        detail::add_fallback_step(trace, e.what());
        detail::numeric_pinv_steps(trace, to_float(m), opts);
        return trace;
    }
    Step sv(StepKind::SingularValues, "Positive singular values of M.");
    auto sigmas = s.singular_values();
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        sv.with("sigma" + std::to_string(i + 1), AnyScalar(RadicalSum(sigmas[i])));
    if (s.rank == 0) sv.note += " Rank is zero: the pseudoinverse is the zero matrix.";
    trace.add(std::move(sv));
    trace.add(Step(StepKind::AssembleFactor, "Reduced right factor.").with("V", AnyMatrix(s.v)));
    trace.add(Step(StepKind::AssembleFactor, "Reduced positive diagonal.")
                  .with("D", AnyMatrix(s.sigma)));
    trace.add(Step(StepKind::AssembleFactor, "Reduced left factor.").with("U", AnyMatrix(s.u)));
    Matrix<RadicalSum> d_inv(s.rank, s.rank);
    for (int i = 0; i < s.rank; ++i) d_inv(i, i) = RadicalSum(invert(s.sigma(i, i).single_term()));
    trace.add(Step(StepKind::Inverse, "Inverted the positive diagonal.")
                  .with("D^-1", AnyMatrix(d_inv)));
    Matrix<Rational> pinv = pseudoinverse(m);
    trace.add(Step(StepKind::AssembleFactor,
                   "Pseudoinverse V D^-1 U^T; the radicals cancel to rationals.")
                  .with("M^+", AnyMatrix(pinv)));
    trace.add(Step(StepKind::Verify, "All four Penrose conditions hold exactly.")
                  .with("M*M^+*M", AnyMatrix(matmul(matmul(m, pinv), m))));
    return trace;
}

}  // namespace exfact

#endif  // EXFACT_TRACE_HPP
