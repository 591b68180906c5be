#ifndef EXFACT_QUADRATIC_HPP
#define EXFACT_QUADRATIC_HPP

#include <string>
#include <utility>
#include <variant>

#include "exfact/errors.hpp"
#include "exfact/radical.hpp"
#include "exfact/rational.hpp"

namespace exfact {

/// Number a + b*sqrt(d) in a single quadratic extension of Q. d is
/// square-free; a plain rational is stored as (a, 0, 1), so values from
/// different computations mix freely as long as at most one genuine
/// extension is involved. Mixing two extensions throws FieldMismatch.
class QuadRational {
  public:
    QuadRational() : a_(0), b_(0), d_(1) {}
    QuadRational(int value) : a_(value), b_(0), d_(1) {}          // NOLINT(google-explicit-constructor)
    QuadRational(const Rational& value) : a_(value), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
    QuadRational(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 1) throw Error("quadratic extension needs d >= 1");
        if (d_ == 1) {  // sqrt(1) = 1
            a_ += b_;
            b_ = 0;
        }
        if (b_.is_zero()) d_ = 1;
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    const BigInt& extension() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Rational rational_value() const {
        if (!is_rational()) throw FieldMismatch("quadratic value is not rational: " + str());
        return a_;
    }

    /// Exact sign: +1, 0 or -1.
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() > 0 && b_.sign() > 0) return 1;
        if (a_.sign() < 0 && b_.sign() < 0) return -1;
        // Signs differ: compare a^2 against b^2*d. They cannot be equal,
        // since that would make sqrt(d) rational.
        int cmp = (a_ * a_ < b_ * b_ * Rational(d_)) ? -1 : 1;
        return a_.sign() > 0 ? (cmp > 0 ? 1 : -1) : (cmp > 0 ? -1 : 1);
    }

    friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
        BigInt d = joined_extension(x, y);
        return QuadRational(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadRational operator-(const QuadRational& x, const QuadRational& y) { return x + (-y); }
    QuadRational operator-() const { return QuadRational(-a_, -b_, d_); }
    friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
        BigInt d = joined_extension(x, y);
        return QuadRational(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                            x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadRational operator/(const QuadRational& x, const QuadRational& y) {
        if (y.is_zero()) throw Error("quadratic division by zero");
        BigInt d = joined_extension(x, y);
        // Multiply by the conjugate; the norm a^2 - b^2*d never vanishes for
        // nonzero values because d is not a perfect square.
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        return QuadRational((x.a_ * y.a_ - x.b_ * y.b_ * Rational(d)) / norm,
                            (x.b_ * y.a_ - x.a_ * y.b_) / norm, d);
    }
    QuadRational& operator+=(const QuadRational& o) { *this = *this + o; return *this; }
    QuadRational& operator-=(const QuadRational& o) { *this = *this - o; return *this; }
    QuadRational& operator*=(const QuadRational& o) { *this = *this * o; return *this; }
    QuadRational& operator/=(const QuadRational& o) { *this = *this / o; return *this; }

    friend bool operator==(const QuadRational& x, const QuadRational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadRational& x, const QuadRational& y) { return !(x == y); }

    double to_double() const {
        double d = a_.to_double() + b_.to_double() * std::sqrt(d_.convert_to<double>());
        if (std::isinf(d)) throw Overflow("quadratic value exceeds double range");
        return d;
    }

    std::string str() const {
        if (is_rational()) return a_.str();
        RadicalTerm surd{b_, d_};
        if (a_.is_zero()) return to_string(surd);
        if (b_.sign() < 0) return "(" + a_.str() + " - " + to_string(RadicalTerm{-b_, d_}) + ")";
        return "(" + a_.str() + " + " + to_string(surd) + ")";
    }

  private:
    static BigInt joined_extension(const QuadRational& x, const QuadRational& y) {
        if (x.d_ == y.d_ || y.d_ == 1) return x.d_;
        if (x.d_ == 1) return y.d_;
        throw FieldMismatch("mixing quadratic extensions sqrt(" + x.d_.str() + ") and sqrt(" +
                            y.d_.str() + ")");
    }

    Rational a_, b_;
    BigInt d_;
};

inline std::string to_string(const QuadRational& q) { return q.str(); }
inline double to_double(const QuadRational& q) { return q.to_double(); }

/// Exact roots of x^2 + p*x + q, in descending order. A rational-square
/// discriminant yields two Rationals; a positive non-square discriminant
/// yields a conjugate QuadRational pair over the square-free part of the
/// discriminant; a negative discriminant throws ComplexRootsUnsupported.
using QuadraticRoots =
    std::variant<std::pair<Rational, Rational>, std::pair<QuadRational, QuadRational>>;

inline QuadraticRoots solve_monic_quadratic(const Rational& p, const Rational& q) {
    Rational disc = p * p - Rational(4) * q;
    if (disc.sign() < 0)
        throw ComplexRootsUnsupported("negative discriminant " + disc.str());
    RadicalTerm root = sqrt_of_rational(disc);  // sqrt(disc) = c*sqrt(d)
    Rational half(BigInt(1), BigInt(2));
    if (root.is_rational()) {
        Rational hi = (-p + root.coeff) * half;
        Rational lo = (-p - root.coeff) * half;
        return std::make_pair(hi, lo);
    }
    Rational a = -p * half;
    Rational b = root.coeff * half;
    return std::make_pair(QuadRational(a, b, root.radicand), QuadRational(a, -b, root.radicand));
}

}  // namespace exfact

#endif  // EXFACT_QUADRATIC_HPP
