#ifndef EXFACT_RENDER_HPP
#define EXFACT_RENDER_HPP

#include <json.hpp>

#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "exfact/diagnose.hpp"
#include "exfact/trace.hpp"

namespace exfact {

enum class RenderFormat { Text, Latex, Json };

inline constexpr const char* kSchemaVersion = "1";

namespace render_detail {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

// -- plain text scalars -------------------------------------------------------

inline std::string text_scalar(const Rational& x, int) { return x.str(); }
inline std::string text_scalar(const RadicalSum& x, int) { return x.str(); }
inline std::string text_scalar(const QuadRational& x, int) { return x.str(); }
inline std::string text_scalar(double x, int precision) { return format_double(x, precision); }

inline std::string text_scalar(const AnyScalar& x, int precision) {
    return std::visit([&](const auto& v) { return text_scalar(v, precision); }, x);
}

template <typename T>
std::string text_vector(const std::vector<T>& v, int precision) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += text_scalar(v[i], precision);
    }
    return out + ")";
}

inline std::string text_vector(const AnyVector& v, int precision) {
    return std::visit([&](const auto& vec) { return text_vector(vec, precision); }, v);
}

template <typename T>
std::string text_matrix(const Matrix<T>& m, int precision) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> width(m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            cells[r][c] = text_scalar(m(r, c), precision);
            width[c] = std::max(width[c], cells[r][c].size());
        }
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += " ";
            out += std::string(width[c] - cells[r][c].size(), ' ') + cells[r][c];
        }
        out += "]\n";
    }
    if (m.rows() == 0) out = "[" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "]\n";
    return out;
}

inline std::string text_matrix(const AnyMatrix& m, int precision) {
    return std::visit([&](const auto& mat) { return text_matrix(mat, precision); }, m);
}

// -- latex scalars -------------------------------------------------------------

inline std::string latex_scalar(const Rational& x, int) {
    if (x.is_integer()) return x.numerator().str();
    std::string sign = x.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + x.abs().numerator().str() + "}{" + x.denominator().str() + "}";
}

inline std::string latex_term(const RadicalTerm& t, int precision) {
    if (t.is_rational()) return latex_scalar(t.coeff, precision);
    std::string root = "\\sqrt{" + t.radicand.str() + "}";
    if (t.coeff == Rational(1)) return root;
    if (t.coeff == Rational(-1)) return "-" + root;
    return latex_scalar(t.coeff, precision) + " " + root;
}

inline std::string latex_scalar(const RadicalSum& x, int precision) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, coeff] : x.terms()) {
        RadicalTerm t{coeff, rad};
        if (first) {
            out += latex_term(t, precision);
            first = false;
        } else if (coeff.sign() < 0) {
            out += " - " + latex_term({-coeff, rad}, precision);
        } else {
            out += " + " + latex_term(t, precision);
        }
    }
    return out;
}

inline std::string latex_scalar(const QuadRational& x, int precision) {
    if (x.is_rational()) return latex_scalar(x.rational_part(), precision);
    std::string out;
    if (!x.rational_part().is_zero()) out += latex_scalar(x.rational_part(), precision);
    RadicalTerm surd{x.surd_coeff(), x.extension()};
    if (out.empty()) return latex_term(surd, precision);
    if (x.surd_coeff().sign() < 0)
        return out + " - " + latex_term({-x.surd_coeff(), x.extension()}, precision);
    return out + " + " + latex_term(surd, precision);
}

inline std::string latex_scalar(double x, int precision) { return format_double(x, precision); }

inline std::string latex_scalar(const AnyScalar& x, int precision) {
    return std::visit([&](const auto& v) { return latex_scalar(v, precision); }, x);
}

template <typename T>
std::string latex_matrix(const Matrix<T>& m, int precision) {
    std::string out = "\\begin{bmatrix}";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out += " \\\\ ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += " & ";
            out += latex_scalar(m(r, c), precision);
        }
    }
    return out + "\\end{bmatrix}";
}

inline std::string latex_matrix(const AnyMatrix& m, int precision) {
    return std::visit([&](const auto& mat) { return latex_matrix(mat, precision); }, m);
}

template <typename T>
std::string latex_vector(const std::vector<T>& v, int precision) {
    std::string out = "\\begin{pmatrix}";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " \\\\ ";
        out += latex_scalar(v[i], precision);
    }
    return out + "\\end{pmatrix}";
}

inline std::string latex_vector(const AnyVector& v, int precision) {
    return std::visit([&](const auto& vec) { return latex_vector(vec, precision); }, v);
}

inline std::string latex_poly(const CharPoly& p) {
    if (p.degree() == 0) return latex_scalar(p.coeffs[0], 12);
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs[k];
        if (c.is_zero()) continue;
        std::string term;
        Rational mag = c.abs();
        if (k == 0) {
            term = latex_scalar(mag, 12);
        } else {
            std::string var = k == 1 ? "x" : (k < 10 ? "x^" + std::to_string(k)
                                                     : "x^{" + std::to_string(k) + "}");
            term = (mag == Rational(1)) ? var : latex_scalar(mag, 12) + " " + var;
        }
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// -- json records ----------------------------------------------------------------

inline Json json_scalar(const Rational& x) {
    return Json{{"num", x.numerator().str()}, {"den", x.denominator().str()}};
}

inline Json json_scalar(const RadicalSum& x) {
    Json terms = Json::array();
    for (const auto& [rad, coeff] : x.terms())
        terms.push_back(Json{{"coeff", json_scalar(coeff)}, {"radicand", rad.str()}});
    return Json{{"terms", terms}};
}

inline Json json_scalar(const QuadRational& x) {
    return Json{{"a", json_scalar(x.rational_part())},
                {"b", json_scalar(x.surd_coeff())},
                {"d", x.extension().str()}};
}

inline Json json_scalar(double x) { return Json(x); }

inline Json json_scalar(const AnyScalar& x) {
    return std::visit([](const auto& v) { return json_scalar(v); }, x);
}

template <typename T>
const char* field_name() {
    if constexpr (std::is_same_v<T, Rational>) return "rational";
    if constexpr (std::is_same_v<T, RadicalSum>) return "radical";
    if constexpr (std::is_same_v<T, QuadRational>) return "quadratic";
    return "float";
}

template <typename T>
Json json_vector(const std::vector<T>& v) {
    Json entries = Json::array();
    for (const auto& x : v) entries.push_back(json_scalar(x));
    return Json{{"field", field_name<T>()}, {"entries", entries}};
}

inline Json json_vector(const AnyVector& v) {
    return std::visit([](const auto& vec) { return json_vector(vec); }, v);
}

template <typename T>
Json json_matrix(const Matrix<T>& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(json_scalar(m(r, c)));
        rows.push_back(row);
    }
    return Json{{"field", field_name<T>()},
                {"rows", static_cast<int>(m.rows())},
                {"cols", static_cast<int>(m.cols())},
                {"data", rows}};
}

inline Json json_matrix(const AnyMatrix& m) {
    return std::visit([](const auto& mat) { return json_matrix(mat); }, m);
}

inline Json json_payload_value(const PayloadValue& value) {
    if (const auto* s = std::get_if<AnyScalar>(&value)) return json_scalar(*s);
    if (const auto* v = std::get_if<AnyVector>(&value)) return json_vector(*v);
    if (const auto* m = std::get_if<AnyMatrix>(&value)) return json_matrix(*m);
    if (const auto* list = std::get_if<VectorList>(&value)) {
        Json vectors = Json::array();
        for (const auto& v : list->vectors) vectors.push_back(json_vector(v));
        return Json{{"column_vectors", list->column_vectors}, {"vectors", vectors}};
    }
    if (const auto* p = std::get_if<CharPoly>(&value)) {
        Json coeffs = Json::array();
        for (const auto& c : p->coeffs) coeffs.push_back(json_scalar(c));
        return Json{{"coefficients", coeffs}};
    }
    return Json(std::get<std::string>(value));
}

inline std::string text_payload_line(const std::string& name, const PayloadValue& value,
                                     int precision) {
    if (const auto* s = std::get_if<AnyScalar>(&value)) return name + " = " + text_scalar(*s, precision) + "\n";
    if (const auto* v = std::get_if<AnyVector>(&value)) return name + " = " + text_vector(*v, precision) + "\n";
    if (const auto* m = std::get_if<AnyMatrix>(&value))
        return "Matrix " + name + " =\n" + text_matrix(*m, precision);
    if (const auto* list = std::get_if<VectorList>(&value)) {
        std::string out = name + " = [";
        for (std::size_t i = 0; i < list->vectors.size(); ++i) {
            if (i) out += ", ";
            out += text_vector(list->vectors[i], precision);
        }
        return out + "]\n";
    }
    if (const auto* p = std::get_if<CharPoly>(&value)) return name + "(x) = " + to_string(*p) + "\n";
    return name + ": " + std::get<std::string>(value) + "\n";
}

inline std::string text_step(const Step& step, int precision) {
    std::string out;
    switch (step.kind) {
        case StepKind::Eigenvalues: {
            // Session style: one bracketed list, descending.
            std::string values;
            for (const auto& [name, value] : step.payload) {
                if (const auto* s = std::get_if<AnyScalar>(&value)) {
                    if (!values.empty()) values += ", ";
                    values += text_scalar(*s, precision);
                }
            }
            out += "Eigenvalues = [" + values + "]\n";
            return out;
        }
        case StepKind::Eigenvectors: {
            out += "Eigenvalue, eigenspace basis, and geometric multiplicity:\n";
            // Items alternate eigenvalueK / basisK.
            const AnyScalar* pending = nullptr;
            for (const auto& [name, value] : step.payload) {
                if (const auto* s = std::get_if<AnyScalar>(&value)) pending = s;
                if (const auto* list = std::get_if<VectorList>(&value)) {
                    std::string vecs;
                    for (std::size_t i = 0; i < list->vectors.size(); ++i) {
                        if (i) vecs += ", ";
                        vecs += text_vector(list->vectors[i], precision);
                    }
                    out += "(" + (pending ? text_scalar(*pending, precision) : "?") + ", [" + vecs +
                           "], " + std::to_string(list->vectors.size()) + ")\n";
                }
            }
            return out;
        }
        case StepKind::Fallback:
            out += step.note + "\n";
            for (const auto& [name, value] : step.payload)
                out += text_payload_line(name, value, precision);
            return out;
        default: {
            if (!step.note.empty()) out += step.note + "\n";
            for (const auto& [name, value] : step.payload)
                out += text_payload_line(name, value, precision);
            return out;
        }
    }
}

inline std::string latex_payload_line(const std::string& name, const PayloadValue& value,
                                      int precision) {
    if (const auto* s = std::get_if<AnyScalar>(&value))
        return "\\[ " + name + " = " + latex_scalar(*s, precision) + " \\]\n";
    if (const auto* v = std::get_if<AnyVector>(&value))
        return "\\[ " + name + " = " + latex_vector(*v, precision) + " \\]\n";
    if (const auto* m = std::get_if<AnyMatrix>(&value))
        return "\\[ " + name + " = " + latex_matrix(*m, precision) + " \\]\n";
    if (const auto* list = std::get_if<VectorList>(&value)) {
        std::string out = "\\[ " + name + " = \\left\\{ ";
        for (std::size_t i = 0; i < list->vectors.size(); ++i) {
            if (i) out += ", ";
            out += latex_vector(list->vectors[i], precision);
        }
        return out + " \\right\\} \\]\n";
    }
    if (const auto* p = std::get_if<CharPoly>(&value))
        return "\\[ " + name + "(x) = " + latex_poly(*p) + " \\]\n";
    return "% " + name + ": " + std::get<std::string>(value) + "\n";
}

}  // namespace render_detail

inline nlohmann::ordered_json to_json(const Trace& trace) {
    using render_detail::Json;
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json payload = Json::object();
        for (const auto& [name, value] : step.payload)
            payload[name] = render_detail::json_payload_value(value);
        steps.push_back(Json{{"kind", to_string(step.kind)}, {"payload", payload}, {"note", step.note}});
    }
    return Json{{"schema_version", kSchemaVersion}, {"steps", steps}};
}

inline nlohmann::ordered_json to_json(const Diagnosis& diagnosis) {
    using render_detail::Json;
    Json findings = Json::array();
    for (const auto& f : diagnosis.findings) {
        Json locus{{"component", f.locus.component}, {"indices", f.locus.indices}};
        findings.push_back(Json{{"code", to_string(f.code)}, {"locus", locus}, {"evidence", f.evidence}});
    }
    Json out{{"schema_version", kSchemaVersion},
             {"verdict", diagnosis.valid() ? "valid" : "invalid"},
             {"findings", findings}};
    if (diagnosis.residuals) {
        Json orth = Json::object();
        for (const auto& [name, value] : diagnosis.residuals->orthogonality) orth[name] = value;
        out["residuals"] =
            Json{{"reconstruction", diagnosis.residuals->reconstruction}, {"orthogonality", orth}};
    }
    return out;
}

inline std::string render(const Trace& trace, RenderFormat format, int precision = 12) {
    if (format == RenderFormat::Json) return to_json(trace).dump(2) + "\n";
    std::string out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (i) out += "\n";
        if (format == RenderFormat::Text) {
            out += render_detail::text_step(trace.steps[i], precision);
        } else {
            const Step& step = trace.steps[i];
            out += "% " + to_string(step.kind) + (step.note.empty() ? "" : ": " + step.note) + "\n";
            for (const auto& [name, value] : step.payload)
                out += render_detail::latex_payload_line(name, value, precision);
        }
    }
    return out;
}

inline std::string render(const Diagnosis& diagnosis, RenderFormat format, int precision = 12) {
    if (format == RenderFormat::Json) return to_json(diagnosis).dump(2) + "\n";
    std::string out;
    if (format == RenderFormat::Text) {
        out += std::string("verdict: ") + (diagnosis.valid() ? "valid" : "invalid") + "\n";
        for (const auto& f : diagnosis.findings) {
            out += "finding: " + to_string(f.code) + " at " + f.locus.component;
            if (!f.locus.indices.empty()) {
                out += "[";
                for (std::size_t i = 0; i < f.locus.indices.size(); ++i)
                    out += (i ? "," : "") + std::to_string(f.locus.indices[i]);
                out += "]";
            }
            out += ": " + f.evidence + "\n";
        }
        if (diagnosis.residuals) {
            out += "reconstruction residual: " +
                   render_detail::format_double(diagnosis.residuals->reconstruction, precision) + "\n";
            for (const auto& [name, value] : diagnosis.residuals->orthogonality)
                out += "orthogonality residual " + name + ": " +
                       render_detail::format_double(value, precision) + "\n";
        }
        return out;
    }
    out += std::string("% verdict: ") + (diagnosis.valid() ? "valid" : "invalid") + "\n";
    if (!diagnosis.findings.empty()) {
        out += "\\begin{itemize}\n";
        for (const auto& f : diagnosis.findings)
            out += "\\item \\texttt{" + to_string(f.code) + "}: " + f.evidence + "\n";
        out += "\\end{itemize}\n";
    }
    return out;
}

}  // namespace exfact

#endif  // EXFACT_RENDER_HPP
