#ifndef EXFACT_RATIONAL_HPP
#define EXFACT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "exfact/errors.hpp"

namespace exfact {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (zero is 0/1). The heavy lifting is delegated to
/// boost::multiprecision::cpp_rational, which maintains exactly these
/// invariants.
class Rational {
  public:
    Rational() = default;
    Rational(int value) : value_(value) {}              // NOLINT(google-explicit-constructor)
    Rational(std::int64_t value) : value_(value) {}     // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}    // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// Round-to-nearest conversion; throws Overflow outside the double range.
    double to_double() const {
        double d = value_.convert_to<double>();
        if (std::isinf(d)) throw Overflow("rational exceeds double range");
        return d;
    }

    /// Renders "n" for integers and "p/q" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

  private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_;
};

/// Parses "3", "-7", "p/q" or a finite decimal like "2.5" (converted
/// exactly, so "2.5" becomes 5/2). Anything else throws Error.
inline Rational parse_rational(const std::string& text) {
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }

    auto slash = s.find('/');
    auto dot = s.find('.');
    Rational result;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den)) throw Error("malformed rational '" + text + "'");
        BigInt d(den);
        if (d == 0) throw Error("zero denominator in '" + text + "'");
        result = Rational(BigInt(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!is_digits(whole) || !is_digits(frac)) throw Error("malformed decimal '" + text + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(BigInt(whole) * scale + BigInt(frac), scale);
    } else {
        if (!is_digits(s)) throw Error("malformed number '" + text + "'");
        result = Rational(BigInt(s));
    }
    return negative ? -result : result;
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace exfact

#endif  // EXFACT_RATIONAL_HPP
