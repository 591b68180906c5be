#ifndef EXFACT_MATRIX_IO_HPP
#define EXFACT_MATRIX_IO_HPP

#include <json.hpp>

#include <fstream>
#include <string>

#include "exfact/matrix.hpp"

namespace exfact {

/// Parses the matrix file document { "rows": [["3", "-1/2", "2.5"], ...] }.
/// Entries are strings holding integers, fractions or finite decimals; all
/// parse to exact rationals (decimals included, so "2.5" is 5/2).
inline Matrix<Rational> parse_matrix(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("rows"))
        throw Error("matrix document must be an object with a \"rows\" array");
    const auto& rows = doc["rows"];
    if (!rows.is_array()) throw Error("\"rows\" must be an array of arrays");
    if (rows.empty()) throw EmptyMatrix("matrix has no rows");
    int n_cols = -1;
    std::vector<std::vector<Rational>> parsed;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (!row.is_array()) throw RaggedRows("row " + std::to_string(r + 1) + " is not an array");
        if (n_cols < 0) n_cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != n_cols)
            throw RaggedRows("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n_cols));
        std::vector<Rational> out_row;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_string())
                throw MalformedEntry("entry is not a string", static_cast<int>(r + 1),
                                     static_cast<int>(c + 1));
            try {
                out_row.push_back(parse_rational(row[c].get<std::string>()));
            } catch (const Error& e) {
                throw MalformedEntry(e.what(), static_cast<int>(r + 1), static_cast<int>(c + 1));
            }
        }
        parsed.push_back(std::move(out_row));
    }
    if (n_cols == 0) throw EmptyMatrix("matrix has no columns");
    return Matrix<Rational>::from_rows(parsed, n_cols);
}

inline Matrix<Rational> parse_matrix_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    return parse_matrix(doc);
}

inline Matrix<Rational> load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open matrix file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_matrix_text(text);
}

/// Canonical matrix file document; parse(render(m)) == m.
inline nlohmann::ordered_json matrix_file_json(const Matrix<Rational>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return nlohmann::ordered_json{{"rows", rows}};
}

inline void write_matrix_file(const std::string& path, const Matrix<Rational>& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write matrix file '" + path + "'");
    out << matrix_file_json(m).dump(2) << "\n";
}

}  // namespace exfact

#endif  // EXFACT_MATRIX_IO_HPP
