#ifndef EXFACT_CLI_HPP
#define EXFACT_CLI_HPP

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "exfact/matrix_io.hpp"
#include "exfact/render.hpp"
#include "exfact/trace.hpp"

namespace exfact {

/// Exit code contract: 0 success or Valid verdict, 1 Invalid verdict,
/// 2 input error, 3 exact computation unsupported for this input (and no
/// fallback applies), 4 numeric failure.
inline int exit_code_for(const Error& e) {
    if (dynamic_cast<const NoConvergence*>(&e) || dynamic_cast<const Overflow*>(&e)) return 4;
    if (dynamic_cast<const NotDiagonalizable*>(&e) || dynamic_cast<const IrrationalSpectrum*>(&e) ||
        dynamic_cast<const UnsupportedSpectrum*>(&e) ||
        dynamic_cast<const IrrationalGramSpectrum*>(&e) ||
        dynamic_cast<const NotSymmetric*>(&e) || dynamic_cast<const FieldEscape*>(&e) ||
        dynamic_cast<const RadicandTooLarge*>(&e) ||
        dynamic_cast<const ComplexRootsUnsupported*>(&e) ||
        dynamic_cast<const IncomparableFields*>(&e))
        return 3;
    return 2;
}

namespace cli_detail {

struct GlobalFlags {
    std::string format = "text";
    std::string mode = "auto";
    int precision = 12;
    unsigned seed = 0;  // reserved; no randomized behavior yet
    NumericOptions numeric;
};

inline RenderFormat parse_format(const std::string& f) {
    if (f == "text") return RenderFormat::Text;
    if (f == "latex") return RenderFormat::Latex;
    return RenderFormat::Json;
}

inline EngineMode parse_mode(const std::string& m) {
    if (m == "exact") return EngineMode::Exact;
    if (m == "numeric") return EngineMode::Numeric;
    return EngineMode::Auto;
}

struct CheckFlags {
    std::string matrix_file;
    std::string p_file, d_file, pinv_file;
    std::string u_file, sigma_file, v_file;
    std::string svd_mode = "full";
    bool numeric_claim = false;
    double tol = 1e-6;
    bool tol_given = false;
};

template <typename Kind>
int run_check(const CheckFlags& flags, const GlobalFlags& globals, Kind kind, std::ostream& out) {
    bool numeric = flags.numeric_claim || flags.tol_given;
    CheckOptions opts;
    opts.tol = flags.tol;
    Diagnosis diagnosis;
    Matrix<Rational> a = load_matrix_file(flags.matrix_file);
    if (kind == 'd') {
        DiagonalizationClaim<Rational> claim{a, load_matrix_file(flags.p_file),
                                             load_matrix_file(flags.d_file), std::nullopt};
        if (!flags.pinv_file.empty()) claim.p_inv = load_matrix_file(flags.pinv_file);
        if (numeric) {
            DiagonalizationClaim<double> fc{to_float(claim.a), to_float(claim.p), to_float(claim.d),
                                            std::nullopt};
            if (claim.p_inv) fc.p_inv = to_float(*claim.p_inv);
            diagnosis = check_diagonalization(fc, opts);
        } else {
            diagnosis = check_diagonalization(claim, opts);
        }
    } else if (kind == 'o') {
        OrthogonalDiagonalizationClaim<Rational> claim{a, load_matrix_file(flags.p_file),
                                                       load_matrix_file(flags.d_file)};
        if (numeric) {
            OrthogonalDiagonalizationClaim<double> fc{to_float(claim.a), to_float(claim.p),
                                                      to_float(claim.d)};
            diagnosis = check_orthogonal_diagonalization(fc, opts);
        } else {
            diagnosis = check_orthogonal_diagonalization(claim, opts);
        }
    } else {
        SvdMode mode = flags.svd_mode == "reduced" ? SvdMode::Reduced : SvdMode::Full;
        SvdClaim<Rational> claim{a, load_matrix_file(flags.u_file), load_matrix_file(flags.sigma_file),
                                 load_matrix_file(flags.v_file), mode};
        if (numeric) {
            SvdClaim<double> fc{to_float(claim.m), to_float(claim.u), to_float(claim.sigma),
                                to_float(claim.v), mode};
            diagnosis = check_svd(fc, opts);
        } else {
            diagnosis = check_svd(claim, opts);
        }
    }
    out << render(diagnosis, parse_format(globals.format), globals.precision);
    return diagnosis.valid() ? 0 : 1;
}

}  // namespace cli_detail

/// Full command-line surface; parses argv (excluding the program name) and
/// writes the rendered result to out. Returns the contract exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::GlobalFlags;
    GlobalFlags globals;

    CLI::App app{"Exact matrix factorization engine and checker"};
    app.name("exfact");
    app.add_option("--format", globals.format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    app.add_option("--mode", globals.mode, "Computation mode: exact, numeric, or auto")
        ->check(CLI::IsMember({"exact", "numeric", "auto"}))
        ->capture_default_str();
    app.add_option("--precision", globals.precision, "Significant digits for numeric output")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", globals.seed, "Reserved; no randomized behavior yet");
    app.add_option("--sweep-limit", globals.numeric.sweep_limit, "Jacobi sweep limit");
    app.add_option("--off-diag-tol", globals.numeric.off_diagonal_tol,
                   "Jacobi off-diagonal tolerance (relative)");
    app.add_option("--zero-sigma-tol", globals.numeric.zero_sigma_rel_tol,
                   "Relative threshold below which singular values count as zero");
    app.add_option("--verify-tol", globals.numeric.verify_rel_tol,
                   "Relative tolerance for numeric verification");
    app.require_subcommand(1);

    std::string input_file;
    bool reduced = false;

    auto* eigen_cmd = app.add_subcommand("eigen", "Exact eigensystem report");
    eigen_cmd->add_option("file", input_file, "Matrix file")->required();
    eigen_cmd->fallthrough();

    auto* diag_cmd = app.add_subcommand("diag", "Diagonalization A = P D P^-1");
    diag_cmd->add_option("file", input_file, "Matrix file")->required();
    diag_cmd->fallthrough();

    auto* orthdiag_cmd =
        app.add_subcommand("orthdiag", "Orthogonal diagonalization A = P D P^T");
    orthdiag_cmd->add_option("file", input_file, "Matrix file")->required();
    orthdiag_cmd->fallthrough();

    auto* svd_cmd = app.add_subcommand("svd", "Singular value decomposition M = U Sigma V^T");
    svd_cmd->add_option("file", input_file, "Matrix file")->required();
    svd_cmd->add_flag("--reduced", reduced, "Reduced factorization (rank-width factors)");
    svd_cmd->fallthrough();

    auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse via reduced SVD");
    pinv_cmd->add_option("file", input_file, "Matrix file")->required();
    pinv_cmd->fallthrough();

    cli_detail::CheckFlags check_flags;
    auto* check_cmd = app.add_subcommand("check", "Verify a claimed factorization");
    check_cmd->require_subcommand(1);
    check_cmd->fallthrough();
    auto add_common_check_options = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", check_flags.matrix_file, "Source matrix file")->required();
        cmd->add_flag("--numeric", check_flags.numeric_claim,
                      "Check the claim in floating point (default tolerance 1e-6)");
        cmd->add_option("--tol", check_flags.tol, "Relative tolerance; implies --numeric")
            ->check(CLI::PositiveNumber);
        cmd->fallthrough();
    };
    auto* check_diag_cmd = check_cmd->add_subcommand("diag", "Check A = P D P^-1");
    add_common_check_options(check_diag_cmd);
    check_diag_cmd->add_option("--p", check_flags.p_file, "Claimed P")->required();
    check_diag_cmd->add_option("--d", check_flags.d_file, "Claimed D")->required();
    check_diag_cmd->add_option("--pinv", check_flags.pinv_file, "Claimed P^-1 (optional)");
    auto* check_orthdiag_cmd = check_cmd->add_subcommand("orthdiag", "Check A = P D P^T");
    add_common_check_options(check_orthdiag_cmd);
    check_orthdiag_cmd->add_option("--p", check_flags.p_file, "Claimed P")->required();
    check_orthdiag_cmd->add_option("--d", check_flags.d_file, "Claimed D")->required();
    auto* check_svd_cmd = check_cmd->add_subcommand("svd", "Check M = U Sigma V^T");
    add_common_check_options(check_svd_cmd);
    check_svd_cmd->add_option("--u", check_flags.u_file, "Claimed U")->required();
    check_svd_cmd->add_option("--sigma", check_flags.sigma_file, "Claimed Sigma")->required();
    check_svd_cmd->add_option("--v", check_flags.v_file, "Claimed V")->required();
    check_svd_cmd->add_option("--mode", check_flags.svd_mode, "Asserted mode")
        ->check(CLI::IsMember({"full", "reduced"}))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("exfact");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    check_flags.tol_given = check_svd_cmd->count("--tol") || check_diag_cmd->count("--tol") ||
                            check_orthdiag_cmd->count("--tol");

    RenderFormat format = cli_detail::parse_format(globals.format);
    EngineMode mode = cli_detail::parse_mode(globals.mode);

    try {
        if (eigen_cmd->parsed()) {
            out << render(trace_eigensystem(load_matrix_file(input_file), mode, globals.numeric),
                          format, globals.precision);
            return 0;
        }
        if (diag_cmd->parsed()) {
            out << render(trace_diagonalize(load_matrix_file(input_file), mode, globals.numeric),
                          format, globals.precision);
            return 0;
        }
        if (orthdiag_cmd->parsed()) {
            out << render(
                trace_orthogonal_diagonalize(load_matrix_file(input_file), mode, globals.numeric),
                format, globals.precision);
            return 0;
        }
        if (svd_cmd->parsed()) {
            out << render(trace_svd(load_matrix_file(input_file),
                                    reduced ? SvdMode::Reduced : SvdMode::Full, mode,
                                    globals.numeric),
                          format, globals.precision);
            return 0;
        }
        if (pinv_cmd->parsed()) {
            out << render(trace_pseudoinverse(load_matrix_file(input_file), mode, globals.numeric),
                          format, globals.precision);
            return 0;
        }
        if (check_cmd->parsed()) {
            if (check_diag_cmd->parsed()) return cli_detail::run_check(check_flags, globals, 'd', out);
            if (check_orthdiag_cmd->parsed())
                return cli_detail::run_check(check_flags, globals, 'o', out);
            return cli_detail::run_check(check_flags, globals, 's', out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace exfact

#endif  // EXFACT_CLI_HPP
