#ifndef EXFACT_RADICAL_HPP
#define EXFACT_RADICAL_HPP

#include <map>
#include <string>
#include <utility>

#include "exfact/errors.hpp"
#include "exfact/rational.hpp"

namespace exfact {

namespace detail {

// Trial-division bounds for square-free extraction. Radicands in this
// problem domain come from norms of small integer vectors, so anything the
// loop cannot finish is out of scope rather than worth a factoring engine.
inline constexpr std::int64_t kTrialDivisionBound = 1'000'000;
inline constexpr std::int64_t kResidualBound = 1'000'000'000;

/// Splits n >= 1 into (s, f) with n = s^2 * f and f square-free.
/// Throws RadicandTooLarge when trial division up to 10^6 leaves a residual
/// cofactor above 10^9 (which is then provably composite and unfactored).
inline std::pair<BigInt, BigInt> square_free_split(BigInt n) {
    BigInt square_part = 1, free_part = 1;
    auto absorb = [&](const BigInt& p, int exponent) {
        for (int i = 0; i < exponent / 2; ++i) square_part *= p;
        if (exponent % 2) free_part *= p;
    };
    for (BigInt p = 2; p <= kTrialDivisionBound && p * p <= n; p = (p == 2 ? BigInt(3) : BigInt(p + 2))) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        absorb(p, e);
    }
    if (n > kResidualBound) throw RadicandTooLarge("radicand cofactor " + n.str() + " too large to factor");
    if (n > 1) free_part *= n;  // residual below the bound is prime here
    return {square_part, free_part};
}

}  // namespace detail

/// One canonical term c*sqrt(r): r is square-free and positive, r = 1 encodes
/// a plain rational, and the zero value is always (0, 1).
struct RadicalTerm {
    Rational coeff;
    BigInt radicand = 1;

    bool is_zero() const { return coeff.is_zero(); }
    bool is_rational() const { return radicand == 1; }

    friend bool operator==(const RadicalTerm& a, const RadicalTerm& b) {
        return a.coeff == b.coeff && a.radicand == b.radicand;
    }
    friend bool operator!=(const RadicalTerm& a, const RadicalTerm& b) { return !(a == b); }
};

/// Rewrites c*sqrt(r) in canonical form by extracting the largest square
/// from r, e.g. (1, 50) -> 5*sqrt(2). r = 0 collapses to the zero term.
inline RadicalTerm canonicalize_radical(const Rational& coeff, const BigInt& radicand) {
    if (radicand < 0) throw Error("negative radicand");
    if (radicand == 0 || coeff.is_zero()) return {Rational(0), BigInt(1)};
    if (radicand == 1) return {coeff, BigInt(1)};
    auto [square, free] = detail::square_free_split(radicand);
    return {coeff * Rational(square), free};
}

/// sqrt of a nonnegative rational as a canonical term:
/// sqrt(p/q) = sqrt(p*q)/q.
inline RadicalTerm sqrt_of_rational(const Rational& value) {
    if (value.sign() < 0) throw Error("square root of negative rational");
    if (value.is_zero()) return {Rational(0), BigInt(1)};
    return canonicalize_radical(Rational(BigInt(1), value.denominator()),
                                value.numerator() * value.denominator());
}

/// 1 / (c*sqrt(r)) = (1/(c*r)) * sqrt(r).
inline RadicalTerm invert(const RadicalTerm& t) {
    if (t.is_zero()) throw Error("division by zero radical term");
    return {Rational(1) / (t.coeff * Rational(t.radicand)), t.radicand};
}

inline RadicalTerm multiply(const RadicalTerm& a, const RadicalTerm& b) {
    if (a.is_zero() || b.is_zero()) return {Rational(0), BigInt(1)};
    // Both radicands are square-free, so their product is g^2 * (coprime
    // square-free parts); no factoring needed.
    BigInt g = gcd(a.radicand, b.radicand);
    return {a.coeff * b.coeff * Rational(g), (a.radicand / g) * (b.radicand / g)};
}

/// Finite sum of canonical radical terms with pairwise distinct square-free
/// radicands, kept in increasing radicand order. Distinct square-free
/// radicands are linearly independent over Q, so this representation is
/// unique and equality is structural.
class RadicalSum {
  public:
    RadicalSum() = default;
    RadicalSum(int value) { add_term({Rational(value), BigInt(1)}); }  // NOLINT(google-explicit-constructor)
    RadicalSum(const Rational& value) { add_term({value, BigInt(1)}); }  // NOLINT(google-explicit-constructor)
    RadicalSum(const RadicalTerm& term) { add_term(term); }  // NOLINT(google-explicit-constructor)

    const std::map<BigInt, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }

    /// The value as a Rational; only valid when is_rational().
    Rational rational_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw FieldMismatch("radical sum is not rational: " + str());
        return terms_.begin()->second;
    }

    /// The value as a single term; throws IncomparableFields on multi-term sums.
    RadicalTerm single_term() const {
        if (terms_.empty()) return {Rational(0), BigInt(1)};
        if (terms_.size() > 1) throw IncomparableFields("multi-term radical sum: " + str());
        return {terms_.begin()->second, terms_.begin()->first};
    }

    friend RadicalSum operator+(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out = a;
        for (const auto& [rad, coeff] : b.terms_) out.add_term({coeff, rad});
        return out;
    }
    friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) { return a + (-b); }
    RadicalSum operator-() const {
        RadicalSum out;
        for (const auto& [rad, coeff] : terms_) out.terms_.emplace(rad, -coeff);
        return out;
    }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out;
        for (const auto& [ra, ca] : a.terms_)
            for (const auto& [rb, cb] : b.terms_) out.add_term(multiply({ca, ra}, {cb, rb}));
        return out;
    }
    RadicalSum& operator+=(const RadicalSum& o) { *this = *this + o; return *this; }
    RadicalSum& operator-=(const RadicalSum& o) { *this = *this - o; return *this; }
    RadicalSum& operator*=(const RadicalSum& o) { *this = *this * o; return *this; }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

    double to_double() const;

    std::string str() const;

  private:
    void add_term(const RadicalTerm& t) {
        if (t.is_zero()) return;
        auto it = terms_.find(t.radicand);
        if (it == terms_.end()) {
            terms_.emplace(t.radicand, t.coeff);
        } else {
            it->second += t.coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<BigInt, Rational> terms_;
};

inline double to_double(const RadicalTerm& t) {
    double r = t.radicand.convert_to<double>();
    double d = t.coeff.to_double() * std::sqrt(r);
    if (std::isinf(d)) throw Overflow("radical term exceeds double range");
    return d;
}

inline double RadicalSum::to_double() const {
    double sum = 0.0;
    for (const auto& [rad, coeff] : terms_) sum += exfact::to_double(RadicalTerm{coeff, rad});
    if (std::isinf(sum)) throw Overflow("radical sum exceeds double range");
    return sum;
}

inline double to_double(const RadicalSum& s) { return s.to_double(); }

inline std::string to_string(const RadicalTerm& t) {
    if (t.is_zero()) return "0";
    if (t.is_rational()) return t.coeff.str();
    std::string root = "sqrt(" + t.radicand.str() + ")";
    if (t.coeff == Rational(1)) return root;
    if (t.coeff == Rational(-1)) return "-" + root;
    return t.coeff.str() + "*" + root;
}

inline std::string RadicalSum::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, coeff] : terms_) {
        RadicalTerm t{coeff, rad};
        if (first) {
            out += to_string(t);
            first = false;
        } else if (coeff.sign() < 0) {
            out += " - " + to_string(RadicalTerm{-coeff, rad});
        } else {
            out += " + " + to_string(t);
        }
    }
    return out;
}

inline std::string to_string(const RadicalSum& s) { return s.str(); }

}  // namespace exfact

#endif  // EXFACT_RADICAL_HPP
