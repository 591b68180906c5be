#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace exfact;
using exfact::testing::rat;
using exfact::testing::random_int_matrix;
using exfact::testing::random_invertible;

namespace {

RadicalSum term(long long num, long long den, long long radicand) {
    return RadicalSum(RadicalTerm{rat(num, den), BigInt(radicand)});
}

}  // namespace

TEST(Matmul, ReconstructsTheWorkedDiagonalization) {
    Matrix<Rational> p{{2, 1, 0}, {1, 0, 1}, {1, 0, -1}};
    Matrix<Rational> d{{3, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Matrix<Rational> p_inv{{0, rat(1, 2), rat(1, 2)}, {1, -1, -1}, {0, rat(1, 2), rat(-1, 2)}};
    Matrix<Rational> a{{1, 2, 2}, {0, 2, 1}, {0, 1, 2}};
    EXPECT_EQ(matmul(matmul(p, d), p_inv), a);
    EXPECT_EQ(matmul(Matrix<Rational>::identity(3), a), a);
}

TEST(Matmul, RadicalSvdFactorsReconstruct) {
    Matrix<RadicalSum> u{{term(1, 5, 5), term(2, 5, 5)}, {term(-2, 5, 5), term(1, 5, 5)}};
    Matrix<RadicalSum> sigma{{term(5, 1, 2), RadicalSum(0)}, {RadicalSum(0), RadicalSum(0)}};
    Matrix<RadicalSum> v{{term(3, 10, 10), term(1, 10, 10)}, {term(-1, 10, 10), term(3, 10, 10)}};
    Matrix<RadicalSum> m = matmul(matmul(u, sigma), transpose(v));
    EXPECT_EQ(m, to_radical(Matrix<Rational>{{3, -1}, {-6, 2}}));
}

TEST(Matmul, ShapeMismatchThrows) {
    Matrix<Rational> a(2, 3), b(2, 3);
    EXPECT_THROW(matmul(a, b), DimensionMismatch);
}

TEST(Rref, WorkedExample) {
    Matrix<Rational> m{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
    auto r = rref(m);
    Matrix<Rational> expected{{1, 0, 3}, {0, 1, 0}, {0, 0, 0}};
    EXPECT_EQ(r.reduced, expected);
    EXPECT_EQ(r.rank, 2);
    EXPECT_EQ(r.pivot_columns, (std::vector<int>{0, 1}));
}

TEST(Rref, FixedPoints) {
    Matrix<Rational> id = Matrix<Rational>::identity(4);
    EXPECT_EQ(rref(id).reduced, id);
    EXPECT_EQ(rref(id).rank, 4);
    Matrix<Rational> zero(3, 3);
    EXPECT_EQ(rref(zero).reduced, zero);
    EXPECT_EQ(rref(zero).rank, 0);
}

TEST(Rref, IdempotentAndReplayable) {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        Matrix<Rational> m = random_int_matrix(rng, 2 + i % 4, 2 + (i / 2) % 4);
        auto r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        EXPECT_EQ(replay(m, r.step_log), r.reduced);  // bit-for-bit
        EXPECT_EQ(rref(transpose(m)).rank, r.rank);
    }
}

TEST(Nullspace, WorkedExamples) {
    Matrix<Rational> a{{1, 2, 2}, {0, 2, 1}, {0, 1, 2}};
    Matrix<Rational> shifted = a;
    for (int i = 0; i < 3; ++i) shifted(i, i) -= rat(1);
    auto basis = nullspace_basis(shifted);
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(basis[1], (std::vector<Rational>{0, 1, -1}));

    auto sym = nullspace_basis(Matrix<Rational>{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}});
    ASSERT_EQ(sym.size(), 1u);
    EXPECT_EQ(sym[0], (std::vector<Rational>{3, 0, -1}));

    EXPECT_TRUE(nullspace_basis(Matrix<Rational>::identity(3)).empty());
}

TEST(Nullspace, VectorsAreExactKernelMembers) {
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        Matrix<Rational> m = random_int_matrix(rng, 2 + i % 3, 2 + (i / 3) % 4);
        auto r = rref(m);
        auto basis = nullspace_basis(m);
        EXPECT_EQ(static_cast<int>(basis.size()), m.cols() - r.rank);
        for (const auto& v : basis) {
            for (const auto& entry : matvec(m, v)) EXPECT_TRUE(entry.is_zero());
            // canonical form: integer entries, gcd 1, first nonzero positive
            BigInt g = 0;
            for (const auto& x : v) {
                EXPECT_EQ(x.denominator(), BigInt(1));
                g = gcd(g, x.numerator());
            }
            EXPECT_EQ(g, BigInt(1));
            for (const auto& x : v) {
                if (x.is_zero()) continue;
                EXPECT_GT(x.sign(), 0);
                break;
            }
        }
    }
}

TEST(Inverse, WorkedExample) {
    Matrix<Rational> p{{2, 1, 0}, {1, 0, 1}, {1, 0, -1}};
    Matrix<Rational> expected{{0, rat(1, 2), rat(1, 2)}, {1, -1, -1}, {0, rat(1, 2), rat(-1, 2)}};
    EXPECT_EQ(inverse(p), expected);
    EXPECT_EQ(inverse(Matrix<Rational>::identity(3)), Matrix<Rational>::identity(3));
    EXPECT_THROW(inverse(Matrix<Rational>{{1, 1}, {1, 1}}), SingularMatrix);
}

TEST(Inverse, ExactRoundTripOnRandomMatrices) {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        int n = 1 + i % 5;
        Matrix<Rational> m = random_invertible(rng, n);
        EXPECT_EQ(matmul(m, inverse(m)), Matrix<Rational>::identity(n));
    }
}

TEST(Determinant, WorkedExamples) {
    EXPECT_EQ(determinant(Matrix<Rational>{{3, -4, -4}, {-4, 3, -4}, {-4, -4, 3}}), rat(-245));
    EXPECT_EQ(determinant(Matrix<Rational>::identity(5)), rat(1));
    EXPECT_EQ(determinant(Matrix<Rational>{{3, 1}, {0, 2}}), rat(6));
    EXPECT_EQ(determinant(Matrix<Rational>{{0, 1}, {1, 0}}), rat(-1));  // forced pivot swap
}

TEST(Determinant, QuadraticFieldEigenvalueTest) {
    // det(A - lambda I) = 0 exactly for an irrational eigenvalue of A
    Matrix<Rational> a{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
    QuadRational lambda(rat(15, 2), rat(1, 2), BigInt(185));
    Matrix<QuadRational> shifted = to_quadratic(a);
    for (int i = 0; i < 3; ++i) shifted(i, i) -= lambda;
    EXPECT_TRUE(determinant(shifted).is_zero());
}

TEST(Determinant, RadicalFieldCofactorExpansion) {
    // Orthogonal matrix with radical entries has determinant +-1.
    Matrix<RadicalSum> p{{term(1, 2, 2), term(1, 2, 2)}, {term(1, 2, 2), term(-1, 2, 2)}};
    RadicalSum det = determinant(p);
    EXPECT_TRUE(det == RadicalSum(1) || det == RadicalSum(-1));
}

TEST(VectorOps, DotCrossNorm) {
    EXPECT_EQ(dot(std::vector<Rational>{1, 0, -1}, std::vector<Rational>{0, 1, -1}), rat(1));
    EXPECT_EQ(dot(std::vector<Rational>{3, -2}, std::vector<Rational>{0, 0}), rat(0));

    // u1, u2 from the 3x2 worked SVD; cross gives the completion direction.
    std::vector<RadicalSum> u1{RadicalSum(0), term(-1, 2, 2), term(-1, 2, 2)};
    std::vector<RadicalSum> u2{term(2, 3, 2), term(1, 6, 2), term(-1, 6, 2)};
    auto u3 = cross(u1, u2);
    EXPECT_EQ(u3[0], RadicalSum(rat(1, 3)));
    EXPECT_EQ(u3[1], RadicalSum(rat(-2, 3)));
    EXPECT_EQ(u3[2], RadicalSum(rat(2, 3)));

    EXPECT_EQ(norm_squared(std::vector<Rational>{1, -2, 2}), rat(9));
    EXPECT_THROW(dot(std::vector<Rational>{1}, std::vector<Rational>{1, 2}), DimensionMismatch);
    EXPECT_THROW(cross(std::vector<Rational>{1, 2}, std::vector<Rational>{2, 1}), DimensionMismatch);
}

TEST(VectorOps, CrossProductOrthogonality) {
    std::mt19937 rng(37);
    for (int i = 0; i < 200; ++i) {
        auto u = random_int_matrix(rng, 1, 3, -9, 9).row(0);
        auto v = random_int_matrix(rng, 1, 3, -9, 9).row(0);
        auto w = cross(u, v);
        EXPECT_TRUE(dot(w, u).is_zero());
        EXPECT_TRUE(dot(w, v).is_zero());
        for (const auto& x : cross(u, u)) EXPECT_TRUE(x.is_zero());
    }
}
