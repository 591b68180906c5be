#ifndef EXFACT_SCALAR_HPP
#define EXFACT_SCALAR_HPP

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "exfact/quadratic.hpp"
#include "exfact/radical.hpp"
#include "exfact/rational.hpp"

namespace exfact {

enum class Ordering { Less, Equal, Greater };

inline Ordering ordering_of(int sign) {
    return sign < 0 ? Ordering::Less : (sign > 0 ? Ordering::Greater : Ordering::Equal);
}

inline Ordering compare(const Rational& x, const Rational& y) {
    return ordering_of((x - y).sign());
}

/// Exact comparison of single radical terms via sign analysis plus
/// comparison of coeff^2 * radicand for terms of equal sign.
inline Ordering compare(const RadicalTerm& x, const RadicalTerm& y) {
    int sx = x.coeff.sign(), sy = y.coeff.sign();
    if (sx != sy) return ordering_of(sx - sy);
    if (sx == 0) return Ordering::Equal;
    Rational mx = x.coeff * x.coeff * Rational(x.radicand);
    Rational my = y.coeff * y.coeff * Rational(y.radicand);
    Ordering mag = compare(mx, my);
    if (sx > 0) return mag;
    return mag == Ordering::Less ? Ordering::Greater
                                 : (mag == Ordering::Greater ? Ordering::Less : Ordering::Equal);
}

inline Ordering compare(const QuadRational& x, const QuadRational& y) {
    return ordering_of((x - y).sign());  // FieldMismatch surfaces on mixed extensions
}

/// Defined for sums that are single terms; anything wider throws
/// IncomparableFields (multi-term ordering is out of scope).
inline Ordering compare(const RadicalSum& x, const RadicalSum& y) {
    return compare(x.single_term(), y.single_term());
}

inline Ordering compare(const Rational& x, const QuadRational& y) { return compare(QuadRational(x), y); }
inline Ordering compare(const QuadRational& x, const Rational& y) { return compare(x, QuadRational(y)); }

// -- promotions between fields -----------------------------------------------

inline RadicalSum to_radical(const Rational& r) { return RadicalSum(r); }
inline QuadRational to_quadratic(const Rational& r) { return QuadRational(r); }

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double x) { return x; }

/// Shortest decimal form that round-trips to the same double.
inline std::string to_string(double x) {
    char buf[64];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

template <typename T>
bool scalar_is_zero(const T& x) {
    return x == T(0);
}
inline bool scalar_is_zero(double x) { return x == 0.0; }

}  // namespace exfact

#endif  // EXFACT_SCALAR_HPP
