#ifndef EXFACT_CHARPOLY_HPP
#define EXFACT_CHARPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "exfact/linalg.hpp"
#include "exfact/matrix.hpp"

namespace exfact {

/// Monic polynomial with rational coefficients; coeffs[i] holds the
/// coefficient of x^i and the leading coefficient is exactly 1.
struct CharPoly {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }
};

template <typename T>
T poly_eval(const CharPoly& p, const T& x) {
    T acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + T(p.coeffs[i]);
    return acc;
}

inline double poly_eval(const CharPoly& p, double x) {
    double acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs[i].to_double();
    return acc;
}

/// p(A) with matrix Horner; used for Cayley-Hamilton checks.
inline Matrix<Rational> poly_eval(const CharPoly& p, const Matrix<Rational>& a) {
    int n = a.rows();
    Matrix<Rational> acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = matmul(acc, a);
        for (int k = 0; k < n; ++k) acc(k, k) += p.coeffs[i];
    }
    return acc;
}

/// Multiplies by a linear factor (x - root); exact.
inline CharPoly poly_mul_linear(const CharPoly& p, const Rational& root) {
    CharPoly out;
    out.coeffs.assign(p.coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        out.coeffs[i + 1] += p.coeffs[i];
        out.coeffs[i] -= p.coeffs[i] * root;
    }
    return out;
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
/// recurrence. All divisions are by integers, so the result is exact.
inline CharPoly characteristic_polynomial(const Matrix<Rational>& a) {
    if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
    int n = a.rows();
    CharPoly p;
    p.coeffs.assign(n + 1, Rational(0));
    p.coeffs[n] = Rational(1);
    Matrix<Rational> m(n, n);
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} * I
        m = matmul(a, m);
        for (int i = 0; i < n; ++i) m(i, i) += p.coeffs[n - k + 1];
        p.coeffs[n - k] = -trace(matmul(a, m)) / Rational(k);
    }
    return p;
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    if (n == 0) return divs;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        divs.push_back(i);
        if (i * i != n) divs.push_back(n / i);
    }
    return divs;
}

/// Synthetic division by (x - root); assumes root is an exact root of p.
inline CharPoly deflate(const CharPoly& p, const Rational& root) {
    CharPoly q;
    q.coeffs.assign(p.coeffs.size() - 1, Rational(0));
    Rational carry(0);
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeffs[i] + carry * root;
        q.coeffs[i - 1] = carry;
    }
    return q;
}

}  // namespace detail

/// All rational roots of a monic rational polynomial, with multiplicities,
/// via the rational root theorem over the primitive integer form. The
/// returned remainder has no rational roots; roots come back in descending
/// order and (x - r)^m factors times the remainder reconstruct p exactly.
inline std::pair<std::vector<std::pair<Rational, int>>, CharPoly> rational_roots(const CharPoly& p) {
    std::vector<std::pair<Rational, int>> roots;
    CharPoly rem = p;

    auto record_root = [&](const Rational& r) {
        int mult = 0;
        while (rem.degree() >= 1 && poly_eval(rem, r).is_zero()) {
            rem = detail::deflate(rem, r);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
        return mult > 0;
    };

    record_root(Rational(0));

    bool progress = true;
    while (progress && rem.degree() >= 1) {
        progress = false;
        // Primitive integer form: multiply through by the denominator lcm.
        BigInt den_lcm = 1;
        for (const auto& c : rem.coeffs) den_lcm = lcm(den_lcm, c.denominator());
        BigInt constant = (rem.coeffs[0] * Rational(den_lcm)).numerator();
        if (constant == 0) {
            progress = record_root(Rational(0));
            continue;
        }
        auto ps = detail::positive_divisors(constant);
        auto qs = detail::positive_divisors(den_lcm);
        for (const auto& num : ps) {
            for (const auto& den : qs) {
                if (gcd(num, den) != 1) continue;
                Rational candidate(num, den);
                if (poly_eval(rem, candidate).is_zero()) {
                    progress = record_root(candidate);
                } else if (poly_eval(rem, -candidate).is_zero()) {
                    progress = record_root(-candidate);
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return {roots, rem};
}

inline std::string to_string(const CharPoly& p) {
    if (p.degree() == 0) return p.coeffs[0].str();
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        std::string term;
        if (k == 0) {
            term = mag.str();
        } else {
            std::string var = k == 1 ? "x" : "x^" + std::to_string(k);
            term = (mag == Rational(1)) ? var : mag.str() + "*" + var;
        }
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + term;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace exfact

#endif  // EXFACT_CHARPOLY_HPP
