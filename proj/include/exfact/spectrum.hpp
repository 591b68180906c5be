#ifndef EXFACT_SPECTRUM_HPP
#define EXFACT_SPECTRUM_HPP

#include <string>
#include <variant>
#include <vector>

#include "exfact/charpoly.hpp"
#include "exfact/quadratic.hpp"

namespace exfact {

/// An exact eigenvalue: rational, or living in one quadratic extension.
using Eigenvalue = std::variant<Rational, QuadRational>;

inline bool is_rational(const Eigenvalue& e) { return std::holds_alternative<Rational>(e); }

inline QuadRational as_quadratic(const Eigenvalue& e) {
    if (auto* r = std::get_if<Rational>(&e)) return QuadRational(*r);
    return std::get<QuadRational>(e);
}

inline double to_double(const Eigenvalue& e) { return as_quadratic(e).to_double(); }

inline std::string to_string(const Eigenvalue& e) {
    return std::visit([](const auto& v) { return to_string(v); }, e);
}

inline Ordering compare(const Eigenvalue& x, const Eigenvalue& y) {
    if (is_rational(x) && is_rational(y)) return compare(std::get<Rational>(x), std::get<Rational>(y));
    return compare(as_quadratic(x), as_quadratic(y));
}

inline bool operator==(const Eigenvalue& x, const Eigenvalue& y) {
    return compare(x, y) == Ordering::Equal;
}

struct SpectrumEntry {
    Eigenvalue value;
    int multiplicity;
};

/// Distinct eigenvalues with algebraic multiplicities, sorted descending.
using Spectrum = std::vector<SpectrumEntry>;

/// The characteristic polynomial's remainder after rational-root extraction
/// has degree > 2, or its quadratic part has complex roots.
struct UnsupportedSpectrum : Error {
    using Error::Error;
};

/// The spectrum resolves exactly but leaves the rational field, so a
/// rational/orthogonal factorization cannot be assembled. Carries the exact
/// spectrum for trace reporting.
struct IrrationalSpectrum : Error {
    IrrationalSpectrum(const std::string& what, Spectrum spec)
        : Error(what), spectrum(std::move(spec)) {}
    Spectrum spectrum;
};

/// Some eigenvalue has geometric multiplicity below its algebraic one.
struct NotDiagonalizable : Error {
    NotDiagonalizable(const std::string& what, Eigenvalue defective)
        : Error(what), defective_eigenvalue(std::move(defective)) {}
    Eigenvalue defective_eigenvalue;
};

/// Exact eigenvalues of a monic rational polynomial: all rational roots
/// plus, when the deflated remainder is quadratic, its surd roots. Entries
/// come back sorted descending. Throws UnsupportedSpectrum when the
/// remainder resists (degree > 2, or complex quadratic roots).
inline Spectrum resolve_spectrum(const CharPoly& p) {
    auto [roots, remainder] = rational_roots(p);
    Spectrum spectrum;
    for (const auto& [value, mult] : roots) spectrum.push_back({Eigenvalue(value), mult});
    if (remainder.degree() == 2) {
        QuadraticRoots qr;
        try {
            qr = solve_monic_quadratic(remainder.coeffs[1], remainder.coeffs[0]);
        } catch (const ComplexRootsUnsupported&) {
            throw UnsupportedSpectrum("characteristic polynomial has complex roots: " +
                                      to_string(remainder));
        }
        // A rational pair cannot occur (rational_roots already stripped those).
        auto pair = std::get<std::pair<QuadRational, QuadRational>>(qr);
        spectrum.push_back({Eigenvalue(pair.first), 1});
        spectrum.push_back({Eigenvalue(pair.second), 1});
    } else if (remainder.degree() > 0) {
        throw UnsupportedSpectrum("irreducible factor of degree " +
                                  std::to_string(remainder.degree()) + " in " + to_string(remainder));
    }
    std::sort(spectrum.begin(), spectrum.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        return compare(a.value, b.value) == Ordering::Greater;
    });
    return spectrum;
}

inline bool spectrum_is_rational(const Spectrum& s) {
    for (const auto& entry : s)
        if (!is_rational(entry.value)) return false;
    return true;
}

struct EigensystemEntry {
    Eigenvalue value;
    int algebraic_multiplicity;
    // Exactly one of these holds the eigenspace basis, matching the field of
    // the eigenvalue. Vectors are canonical (integer-primitive / cleared
    // denominators, first nonzero entry positive).
    std::vector<std::vector<Rational>> rational_basis;
    std::vector<std::vector<QuadRational>> quadratic_basis;

    int geometric_multiplicity() const {
        return static_cast<int>(rational_basis.size() + quadratic_basis.size());
    }
    bool defective() const { return geometric_multiplicity() < algebraic_multiplicity; }
};

using Eigensystem = std::vector<EigensystemEntry>;

/// Full exact eigensystem: spectrum plus a canonical basis of each
/// eigenspace, computed as the nullspace of A - lambda*I in lambda's field.
inline Eigensystem eigensystem(const Matrix<Rational>& a) {
    if (!a.is_square()) throw DimensionMismatch("eigensystem of non-square matrix");
    Spectrum spectrum = resolve_spectrum(characteristic_polynomial(a));
    Eigensystem out;
    for (const auto& [value, mult] : spectrum) {
        EigensystemEntry entry{value, mult, {}, {}};
        if (is_rational(value)) {
            Matrix<Rational> shifted = a;
            for (int i = 0; i < a.rows(); ++i) shifted(i, i) -= std::get<Rational>(value);
            entry.rational_basis = nullspace_basis(shifted);
        } else {
            Matrix<QuadRational> shifted = to_quadratic(a);
            for (int i = 0; i < a.rows(); ++i) shifted(i, i) -= std::get<QuadRational>(value);
            entry.quadratic_basis = nullspace_basis(shifted);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace exfact

#endif  // EXFACT_SPECTRUM_HPP
