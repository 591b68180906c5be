#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace exfact;
using exfact::testing::rat;

namespace {

CharPoly poly(std::vector<Rational> ascending_coeffs) {
    return CharPoly{std::move(ascending_coeffs)};
}

}  // namespace

TEST(CharacteristicPolynomial, WorkedExamples) {
    EXPECT_EQ(to_string(characteristic_polynomial(Matrix<Rational>{{1, 2, 2}, {0, 2, 1}, {0, 1, 2}})),
              "x^3 - 5*x^2 + 7*x - 3");
    EXPECT_EQ(
        to_string(characteristic_polynomial(Matrix<Rational>{{3, -4, -4}, {-4, 3, -4}, {-4, -4, 3}})),
        "x^3 - 9*x^2 - 21*x + 245");
    EXPECT_EQ(to_string(characteristic_polynomial(Matrix<Rational>{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}})),
              "x^3 - 15*x^2 + 10*x");
    EXPECT_EQ(to_string(characteristic_polynomial(Matrix<Rational>::identity(2))),
              "x^2 - 2*x + 1");
}

TEST(CharacteristicPolynomial, CayleyHamilton) {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 4;
        Matrix<Rational> a = exfact::testing::random_int_matrix(rng, n, n);
        Matrix<Rational> zero = poly_eval(characteristic_polynomial(a), a);
        EXPECT_EQ(zero, Matrix<Rational>(n, n));
    }
}

TEST(RationalRoots, ExtractionAndDeflation) {
    auto [roots, rem] = rational_roots(poly({-3, 7, -5, 1}));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].first, rat(3));
    EXPECT_EQ(roots[0].second, 1);
    EXPECT_EQ(roots[1].first, rat(1));
    EXPECT_EQ(roots[1].second, 2);
    EXPECT_EQ(rem.degree(), 0);

    auto [roots2, rem2] = rational_roots(poly({0, 10, -15, 1}));
    ASSERT_EQ(roots2.size(), 1u);
    EXPECT_EQ(roots2[0].first, rat(0));
    EXPECT_EQ(rem2, poly({10, -15, 1}));

    auto [roots3, rem3] = rational_roots(poly({1, 0, 1}));
    EXPECT_TRUE(roots3.empty());
    EXPECT_EQ(rem3, poly({1, 0, 1}));
}

TEST(RationalRoots, NonIntegerRootsAndReconstruction) {
    // (x - 1/2)(x + 2/3)(x^2 + 1), monic with rational coefficients
    CharPoly p = poly_mul_linear(poly_mul_linear(poly({1, 0, 1}), rat(1, 2)), rat(-2, 3));
    auto [roots, rem] = rational_roots(p);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].first, rat(1, 2));
    EXPECT_EQ(roots[1].first, rat(-2, 3));
    EXPECT_EQ(rem, poly({1, 0, 1}));

    CharPoly rebuilt = rem;
    for (const auto& [root, mult] : roots)
        for (int i = 0; i < mult; ++i) rebuilt = poly_mul_linear(rebuilt, root);
    EXPECT_EQ(rebuilt, p);
}

TEST(RationalRoots, DeflationSoundnessRandomized) {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), count(1, 4);
    for (int i = 0; i < 200; ++i) {
        CharPoly p = poly({rat(1)});
        int k = count(rng);
        for (int j = 0; j < k; ++j) p = poly_mul_linear(p, rat(num(rng), den(rng)));
        auto [roots, rem] = rational_roots(p);
        CharPoly rebuilt = rem;
        int total = 0;
        for (const auto& [root, mult] : roots) {
            total += mult;
            for (int j = 0; j < mult; ++j) rebuilt = poly_mul_linear(rebuilt, root);
        }
        EXPECT_EQ(total, k);  // all roots are rational by construction
        EXPECT_EQ(rebuilt, p);
    }
}

TEST(ResolveSpectrum, WorkedExamples) {
    Spectrum s = resolve_spectrum(poly({245, -21, -9, 1}));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(std::get<Rational>(s[0].value), rat(7));
    EXPECT_EQ(s[0].multiplicity, 2);
    EXPECT_EQ(std::get<Rational>(s[1].value), rat(-5));
    EXPECT_EQ(s[1].multiplicity, 1);

    Spectrum quad = resolve_spectrum(poly({0, 10, -15, 1}));
    ASSERT_EQ(quad.size(), 3u);
    EXPECT_EQ(std::get<QuadRational>(quad[0].value), QuadRational(rat(15, 2), rat(1, 2), BigInt(185)));
    EXPECT_EQ(std::get<QuadRational>(quad[1].value),
              QuadRational(rat(15, 2), rat(-1, 2), BigInt(185)));
    EXPECT_EQ(std::get<Rational>(quad[2].value), rat(0));

    EXPECT_THROW(resolve_spectrum(poly({1, 1, 0, 0, 1})), UnsupportedSpectrum);  // x^4 + x + 1
    EXPECT_THROW(resolve_spectrum(poly({1, 0, 1})), UnsupportedSpectrum);        // complex pair
}

TEST(Eigensystem, WorkedThreeByThree) {
    Eigensystem es = eigensystem(Matrix<Rational>{{1, 2, 2}, {0, 2, 1}, {0, 1, 2}});
    ASSERT_EQ(es.size(), 2u);
    EXPECT_EQ(std::get<Rational>(es[0].value), rat(3));
    EXPECT_EQ(es[0].algebraic_multiplicity, 1);
    ASSERT_EQ(es[0].rational_basis.size(), 1u);
    EXPECT_EQ(es[0].rational_basis[0], (std::vector<Rational>{2, 1, 1}));
    EXPECT_EQ(std::get<Rational>(es[1].value), rat(1));
    EXPECT_EQ(es[1].algebraic_multiplicity, 2);
    EXPECT_EQ(es[1].geometric_multiplicity(), 2);
    EXPECT_EQ(es[1].rational_basis[0], (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(es[1].rational_basis[1], (std::vector<Rational>{0, 1, -1}));
}

TEST(Eigensystem, SymmetricRepeatedEigenvalue) {
    Eigensystem es = eigensystem(Matrix<Rational>{{3, -4, -4}, {-4, 3, -4}, {-4, -4, 3}});
    ASSERT_EQ(es.size(), 2u);
    EXPECT_EQ(std::get<Rational>(es[0].value), rat(7));
    EXPECT_EQ(es[0].geometric_multiplicity(), 2);
    EXPECT_EQ(es[0].rational_basis[0], (std::vector<Rational>{1, 0, -1}));
    EXPECT_EQ(es[0].rational_basis[1], (std::vector<Rational>{0, 1, -1}));
    EXPECT_EQ(std::get<Rational>(es[1].value), rat(-5));
    EXPECT_EQ(es[1].rational_basis[0], (std::vector<Rational>{1, 1, 1}));
}

TEST(Eigensystem, JordanBlockIsDefective) {
    Eigensystem es = eigensystem(Matrix<Rational>{{1, 1}, {0, 1}});
    ASSERT_EQ(es.size(), 1u);
    EXPECT_EQ(es[0].algebraic_multiplicity, 2);
    EXPECT_EQ(es[0].geometric_multiplicity(), 1);
    EXPECT_TRUE(es[0].defective());
    EXPECT_EQ(es[0].rational_basis[0], (std::vector<Rational>{1, 0}));
}

TEST(Eigensystem, QuadraticEigenvectorsSatisfyTheEigenEquation) {
    Matrix<Rational> a{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
    Eigensystem es = eigensystem(a);
    Matrix<QuadRational> aq = to_quadratic(a);
    for (const auto& entry : es) {
        EXPECT_GE(entry.geometric_multiplicity(), 1);
        EXPECT_LE(entry.geometric_multiplicity(), entry.algebraic_multiplicity);
        QuadRational lambda = as_quadratic(entry.value);
        for (const auto& v : entry.quadratic_basis) {
            auto av = matvec(aq, v);
            auto lv = scale(v, lambda);
            EXPECT_EQ(av, lv);
        }
        for (const auto& v : entry.rational_basis) {
            auto av = matvec(a, v);
            auto lv = scale(v, std::get<Rational>(entry.value));
            EXPECT_EQ(av, lv);
        }
    }
}

TEST(Eigensystem, TraceAndDeterminantConsistency) {
    std::mt19937 rng(47);
    int resolved = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 3;
        Matrix<Rational> a = (i % 2 == 0)
                                 ? exfact::testing::symmetric_with_spectrum(
                                       rng, exfact::testing::random_positive_descending(rng, n))
                                 : exfact::testing::random_int_matrix(rng, n, n, -4, 4);
        CharPoly p = characteristic_polynomial(a);
        Spectrum spectrum;
        try {
            spectrum = resolve_spectrum(p);
        } catch (const UnsupportedSpectrum&) {
            continue;
        }
        ++resolved;
        QuadRational trace_sum(0), det_product(1);
        for (const auto& [value, mult] : spectrum)
            for (int k = 0; k < mult; ++k) {
                trace_sum += as_quadratic(value);
                det_product *= as_quadratic(value);
            }
        EXPECT_EQ(trace_sum, QuadRational(trace(a)));
        EXPECT_EQ(det_product, QuadRational(determinant(a)));
    }
    EXPECT_GT(resolved, 100);  // the corpus must actually exercise the law
}
