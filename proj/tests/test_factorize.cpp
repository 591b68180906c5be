#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace exfact;
using exfact::testing::rat;

namespace {

RadicalSum term(long long num, long long den, long long radicand) {
    return RadicalSum(RadicalTerm{rat(num, den), BigInt(radicand)});
}

std::vector<Rational> vec(std::vector<long long> entries) {
    std::vector<Rational> out;
    for (long long e : entries) out.push_back(rat(e));
    return out;
}

void expect_orthonormal(const Matrix<RadicalSum>& q) {
    EXPECT_EQ(matmul(transpose(q), q), Matrix<RadicalSum>::identity(q.cols()));
}

void expect_penrose(const Matrix<Rational>& m, const Matrix<Rational>& pinv) {
    EXPECT_EQ(matmul(matmul(m, pinv), m), m);
    EXPECT_EQ(matmul(matmul(pinv, m), pinv), pinv);
    EXPECT_EQ(transpose(matmul(m, pinv)), matmul(m, pinv));
    EXPECT_EQ(transpose(matmul(pinv, m)), matmul(pinv, m));
}

}  // namespace

TEST(Diagonalize, WorkedThreeByThree) {
    Matrix<Rational> a{{1, 2, 2}, {0, 2, 1}, {0, 1, 2}};
    Diagonalization d = diagonalize(a);
    EXPECT_EQ(d.p, (Matrix<Rational>{{2, 1, 0}, {1, 0, 1}, {1, 0, -1}}));
    EXPECT_EQ(d.d, Matrix<Rational>::diagonal({rat(3), rat(1), rat(1)}));
    EXPECT_EQ(d.p_inv,
              (Matrix<Rational>{{0, rat(1, 2), rat(1, 2)}, {1, -1, -1}, {0, rat(1, 2), rat(-1, 2)}}));
    EXPECT_EQ(matmul(matmul(d.p, d.d), d.p_inv), a);
}

TEST(Diagonalize, EdgeCases) {
    Diagonalization d = diagonalize(Matrix<Rational>{{4, 0}, {0, 2}});
    EXPECT_EQ(d.p, Matrix<Rational>::identity(2));
    EXPECT_EQ(d.d, (Matrix<Rational>{{4, 0}, {0, 2}}));

    try {
        diagonalize(Matrix<Rational>{{1, 1}, {0, 1}});
        FAIL() << "shear must not be diagonalizable";
    } catch (const NotDiagonalizable& e) {
        EXPECT_EQ(std::get<Rational>(e.defective_eigenvalue), rat(1));
    }

    Diagonalization upper = diagonalize(Matrix<Rational>{{3, 1}, {0, 2}});
    EXPECT_EQ(upper.d, (Matrix<Rational>{{3, 0}, {0, 2}}));
    EXPECT_EQ(upper.p.column(0), vec({1, 0}));
    EXPECT_EQ(upper.p.column(1), vec({1, -1}));  // canonical form of the (-1, 1) direction

    EXPECT_THROW(diagonalize(Matrix<Rational>{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}}), IrrationalSpectrum);
}

TEST(GramSchmidt, WorkedExample) {
    auto out = gram_schmidt({vec({1, 0, -1}), vec({0, 1, -1})});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], vec({1, 0, -1}));
    EXPECT_EQ(out[1], vec({1, -2, 1}));  // canonical form of (-1/2, 1, -1/2)

    auto untouched = gram_schmidt({vec({1, 1, 1}), vec({1, 0, -1})});
    EXPECT_EQ(untouched[0], vec({1, 1, 1}));
    EXPECT_EQ(untouched[1], vec({1, 0, -1}));

    EXPECT_THROW(gram_schmidt({vec({1, 0}), vec({2, 0})}), DependentInput);
}

TEST(GramSchmidt, SpanAndOrthogonalityOnRandomInputs) {
    std::mt19937 rng(53);
    for (int i = 0; i < 200; ++i) {
        int dim = 3 + i % 3;
        int count = 2 + i % 2;
        auto input = exfact::testing::random_independent_vectors(rng, count, dim);
        auto output = gram_schmidt(input);
        for (std::size_t a = 0; a < output.size(); ++a)
            for (std::size_t b = a + 1; b < output.size(); ++b)
                EXPECT_TRUE(dot(output[a], output[b]).is_zero());
        // span preservation: identical row-space RREFs
        EXPECT_EQ(rref(Matrix<Rational>::from_rows(input, dim)).reduced,
                  rref(Matrix<Rational>::from_rows(output, dim)).reduced);
    }
}

TEST(NormalizeColumns, WorkedExamples) {
    Matrix<RadicalSum> p = normalize_columns({vec({1, 1, 1})});
    EXPECT_EQ(p(0, 0), term(1, 3, 3));
    EXPECT_EQ(p(1, 0), term(1, 3, 3));
    EXPECT_EQ(p(2, 0), term(1, 3, 3));

    Matrix<RadicalSum> unit = normalize_columns({vec({1, 0, 0})});
    EXPECT_EQ(unit(0, 0), RadicalSum(1));
    EXPECT_EQ(unit(1, 0), RadicalSum(0));

    Matrix<RadicalSum> v = normalize_columns({vec({3, -1})});
    EXPECT_EQ(v(0, 0), term(3, 10, 10));
    EXPECT_EQ(v(1, 0), term(-1, 10, 10));

    EXPECT_THROW(normalize_columns({vec({0, 0})}), ZeroColumn);
}

TEST(OrthogonalDiagonalize, WorkedSymmetricMatrix) {
    Matrix<Rational> b{{3, -4, -4}, {-4, 3, -4}, {-4, -4, 3}};
    OrthogonalDiagonalization od = orthogonal_diagonalize(b);
    EXPECT_EQ(od.d, Matrix<Rational>::diagonal({rat(7), rat(7), rat(-5)}));
    // Columns: normalized (1,0,-1), (1,-2,1), (1,1,1).
    EXPECT_EQ(od.p.column(0), (std::vector<RadicalSum>{term(1, 2, 2), RadicalSum(0), term(-1, 2, 2)}));
    EXPECT_EQ(od.p.column(1),
              (std::vector<RadicalSum>{term(1, 6, 6), term(-1, 3, 6), term(1, 6, 6)}));
    EXPECT_EQ(od.p.column(2),
              (std::vector<RadicalSum>{term(1, 3, 3), term(1, 3, 3), term(1, 3, 3)}));
    expect_orthonormal(od.p);
    EXPECT_EQ(matmul(matmul(od.p, to_radical(od.d)), transpose(od.p)), to_radical(b));
}

TEST(OrthogonalDiagonalize, EdgeCases) {
    OrthogonalDiagonalization od = orthogonal_diagonalize(Matrix<Rational>{{5, 0}, {0, 2}});
    EXPECT_EQ(od.p, to_radical(Matrix<Rational>::identity(2)));
    EXPECT_EQ(od.d, (Matrix<Rational>{{5, 0}, {0, 2}}));

    EXPECT_THROW(orthogonal_diagonalize(Matrix<Rational>{{1, 2}, {3, 4}}), NotSymmetric);

    try {
        orthogonal_diagonalize(Matrix<Rational>{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}});
        FAIL() << "irrational spectrum must be reported";
    } catch (const IrrationalSpectrum& e) {
        ASSERT_EQ(e.spectrum.size(), 3u);
        EXPECT_EQ(std::get<QuadRational>(e.spectrum[0].value),
                  QuadRational(rat(15, 2), rat(1, 2), BigInt(185)));
        EXPECT_EQ(std::get<QuadRational>(e.spectrum[1].value),
                  QuadRational(rat(15, 2), rat(-1, 2), BigInt(185)));
        EXPECT_EQ(std::get<Rational>(e.spectrum[2].value), rat(0));
    }
}

TEST(Svd, RankDeficientSquareMatrix) {
    Matrix<Rational> m{{3, -1}, {-6, 2}};
    Svd s = svd(m, SvdMode::Full);
    EXPECT_EQ(s.rank, 1);
    EXPECT_EQ(s.sigma, (Matrix<RadicalSum>{{term(5, 1, 2), RadicalSum(0)}, {RadicalSum(0), RadicalSum(0)}}));
    EXPECT_EQ(s.v.column(0), (std::vector<RadicalSum>{term(3, 10, 10), term(-1, 10, 10)}));
    EXPECT_EQ(s.v.column(1), (std::vector<RadicalSum>{term(1, 10, 10), term(3, 10, 10)}));
    EXPECT_EQ(s.u.column(0), (std::vector<RadicalSum>{term(1, 5, 5), term(-2, 5, 5)}));
    EXPECT_EQ(s.u.column(1), (std::vector<RadicalSum>{term(2, 5, 5), term(1, 5, 5)}));
    expect_orthonormal(s.u);
    expect_orthonormal(s.v);
    EXPECT_EQ(matmul(matmul(s.u, s.sigma), transpose(s.v)), to_radical(m));
}

TEST(Svd, TallMatrixFullAndReduced) {
    Matrix<Rational> m{{2, -2}, {-3, -4}, {-4, -3}};
    Svd full = svd(m, SvdMode::Full);
    EXPECT_EQ(full.rank, 2);
    EXPECT_EQ(full.sigma.rows(), 3);
    EXPECT_EQ(full.sigma.cols(), 2);
    EXPECT_EQ(full.sigma(0, 0), RadicalSum(7));
    EXPECT_EQ(full.sigma(1, 1), RadicalSum(3));
    EXPECT_EQ(full.sigma(2, 0), RadicalSum(0));
    EXPECT_EQ(full.u.column(2),
              (std::vector<RadicalSum>{RadicalSum(rat(1, 3)), RadicalSum(rat(-2, 3)),
                                       RadicalSum(rat(2, 3))}));
    EXPECT_EQ(matmul(matmul(full.u, full.sigma), transpose(full.v)), to_radical(m));

    Svd reduced = svd(m, SvdMode::Reduced);
    EXPECT_EQ(reduced.u.rows(), 3);
    EXPECT_EQ(reduced.u.cols(), 2);
    EXPECT_EQ(reduced.sigma, (Matrix<RadicalSum>{{RadicalSum(7), RadicalSum(0)}, {RadicalSum(0), RadicalSum(3)}}));
    EXPECT_EQ(reduced.v.rows(), 2);
    EXPECT_EQ(reduced.v.cols(), 2);
    EXPECT_EQ(matmul(matmul(reduced.u, reduced.sigma), transpose(reduced.v)), to_radical(m));
}

TEST(Svd, ZeroMatrixCompletesToIdentities) {
    Matrix<Rational> zero(2, 3);
    Svd s = svd(zero, SvdMode::Full);
    EXPECT_EQ(s.rank, 0);
    EXPECT_EQ(s.u, to_radical(Matrix<Rational>::identity(2)));
    EXPECT_EQ(s.v, to_radical(Matrix<Rational>::identity(3)));
    EXPECT_EQ(s.sigma, Matrix<RadicalSum>(2, 3));

    Svd reduced = svd(zero, SvdMode::Reduced);
    EXPECT_EQ(reduced.u.cols(), 0);
    EXPECT_EQ(reduced.v.cols(), 0);
    EXPECT_EQ(reduced.sigma.rows(), 0);
}

TEST(Svd, SymmetricPositiveDefiniteCoincidence) {
    Matrix<Rational> a{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}};
    Svd s = svd(a, SvdMode::Full);
    auto sigmas = s.singular_values();
    ASSERT_EQ(sigmas.size(), 3u);
    EXPECT_EQ(RadicalSum(sigmas[0]), RadicalSum(5));
    EXPECT_EQ(RadicalSum(sigmas[1]), RadicalSum(2));
    EXPECT_EQ(RadicalSum(sigmas[2]), RadicalSum(2));
    // identical to the eigenvalue multiset for this positive-definite matrix
    Spectrum spec = resolve_spectrum(characteristic_polynomial(a));
    EXPECT_EQ(std::get<Rational>(spec[0].value), rat(5));
    EXPECT_EQ(spec[1].multiplicity, 2);
    EXPECT_EQ(std::get<Rational>(spec[1].value), rat(2));
}

TEST(Svd, IrrationalGramSpectrumIsRejected) {
    EXPECT_THROW(svd(Matrix<Rational>{{3, 1}, {0, 2}}, SvdMode::Full), IrrationalGramSpectrum);
    EXPECT_THROW(pseudoinverse(Matrix<Rational>{{3, 1}, {0, 2}}), IrrationalGramSpectrum);
}

TEST(CompleteOrthonormal, WorkedExamples) {
    auto added = complete_orthonormal({{term(1, 5, 5), term(-2, 5, 5)}}, 2);
    ASSERT_EQ(added.size(), 1u);
    EXPECT_EQ(added[0], (std::vector<RadicalSum>{term(2, 5, 5), term(1, 5, 5)}));

    std::vector<RadicalSum> u1{RadicalSum(0), term(-1, 2, 2), term(-1, 2, 2)};
    std::vector<RadicalSum> u2{term(2, 3, 2), term(1, 6, 2), term(-1, 6, 2)};
    auto third = complete_orthonormal({u1, u2}, 3);
    ASSERT_EQ(third.size(), 1u);
    EXPECT_EQ(third[0], (std::vector<RadicalSum>{RadicalSum(rat(1, 3)), RadicalSum(rat(-2, 3)),
                                                 RadicalSum(rat(2, 3))}));

    auto basis = complete_orthonormal({}, 2);
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], (std::vector<RadicalSum>{RadicalSum(1), RadicalSum(0)}));
    EXPECT_EQ(basis[1], (std::vector<RadicalSum>{RadicalSum(0), RadicalSum(1)}));
}

TEST(CompleteOrthonormal, MixedRadicandsEscapeTheTower) {
    // (sqrt(2)/2, 1/2, 1/2) is unit length but mixes radicands 2 and 1.
    std::vector<RadicalSum> v{term(1, 2, 2), RadicalSum(rat(1, 2)), RadicalSum(rat(1, 2))};
    EXPECT_THROW(complete_orthonormal({v}, 3), FieldEscape);
}

TEST(Pseudoinverse, WorkedExamples) {
    Matrix<Rational> m{{2, -2}, {-3, -4}, {-4, -3}};
    Matrix<Rational> pinv = pseudoinverse(m);
    Matrix<Rational> expected{{rat(14, 63), rat(-1, 63), rat(-8, 63)},
                              {rat(-14, 63), rat(-8, 63), rat(-1, 63)}};
    EXPECT_EQ(pinv, expected);
    expect_penrose(m, pinv);

    EXPECT_EQ(pseudoinverse(Matrix<Rational>{{2, 0}, {0, 4}}),
              (Matrix<Rational>{{rat(1, 2), 0}, {0, rat(1, 4)}}));

    Matrix<Rational> zero(3, 2);
    EXPECT_EQ(pseudoinverse(zero), Matrix<Rational>(2, 3));
    expect_penrose(zero, Matrix<Rational>(2, 3));
}

namespace {

// Shapes whose exact completions only ever touch one missing column per
// factor; deeper deficiencies are covered by fixed small fixtures.
struct CorpusShape {
    int rows, cols, rank;
};
constexpr CorpusShape kCorpusShapes[] = {{2, 2, 2}, {2, 2, 1}, {3, 3, 3}, {3, 3, 2},
                                         {3, 2, 2}, {2, 3, 2}, {4, 4, 4}, {4, 4, 3},
                                         {4, 3, 3}, {3, 4, 3}};

}  // namespace

TEST(Factorizations, ReconstructionOnRandomCorpus) {
    std::mt19937 rng(59);
    for (int i = 0; i < 40; ++i) {
        auto [rows, cols, r] = kCorpusShapes[i % std::size(kCorpusShapes)];
        auto sigmas = exfact::testing::random_distinct_descending(rng, r);
        Matrix<Rational> m = exfact::testing::matrix_with_singular_values(rng, rows, cols, sigmas);

        Svd full = svd(m, SvdMode::Full);
        expect_orthonormal(full.u);
        expect_orthonormal(full.v);
        EXPECT_EQ(matmul(matmul(full.u, full.sigma), transpose(full.v)), to_radical(m));
        EXPECT_EQ(full.rank, r);

        // sigma multiset equals the constructed one
        auto got = full.singular_values();
        std::vector<Rational> got_rationals;
        for (const auto& t : got) {
            EXPECT_TRUE(t.is_rational());
            got_rationals.push_back(t.coeff);
        }
        std::vector<Rational> want = sigmas;
        std::sort(want.begin(), want.end(), [](auto& a, auto& b) { return a > b; });
        EXPECT_EQ(got_rationals, want);

        Svd reduced = svd(m, SvdMode::Reduced);
        EXPECT_EQ(matmul(matmul(reduced.u, reduced.sigma), transpose(reduced.v)), to_radical(m));

        Matrix<Rational> pinv = pseudoinverse(m);
        expect_penrose(m, pinv);

        // transpose has the same positive sigma multiset
        auto tr = svd(transpose(m), SvdMode::Reduced).singular_values();
        std::vector<Rational> tr_rationals;
        for (const auto& t : tr) tr_rationals.push_back(t.coeff);
        EXPECT_EQ(tr_rationals, got_rationals);
    }
}

TEST(Factorizations, SigmaSquaredMatchesGramEigenvalues) {
    std::mt19937 rng(61);
    for (int i = 0; i < 30; ++i) {
        int rows = 2 + i % 2, cols = 2 + (i / 2) % 2;
        int r = 1 + i % std::min(rows, cols);
        Matrix<Rational> m = exfact::testing::matrix_with_singular_values(
            rng, rows, cols, exfact::testing::random_positive_descending(rng, r));
        Svd s = svd(m, SvdMode::Reduced);
        Spectrum gram = resolve_spectrum(characteristic_polynomial(matmul(transpose(m), m)));
        std::vector<Rational> positive;
        for (const auto& [value, mult] : gram) {
            Rational lambda = std::get<Rational>(value);
            if (lambda.sign() > 0)
                for (int k = 0; k < mult; ++k) positive.push_back(lambda);
        }
        auto sigmas = s.singular_values();
        ASSERT_EQ(sigmas.size(), positive.size());
        for (std::size_t k = 0; k < sigmas.size(); ++k) {
            RadicalSum squared = RadicalSum(sigmas[k]) * RadicalSum(sigmas[k]);
            EXPECT_EQ(squared, RadicalSum(positive[k]));
        }
        // non-increasing, positives before zeros (full mode)
        Svd full = svd(m, SvdMode::Full);
        int diag = std::min(full.sigma.rows(), full.sigma.cols());
        for (int k = 0; k + 1 < diag; ++k) {
            double a = to_double(full.sigma(k, k));
            double b = to_double(full.sigma(k + 1, k + 1));
            EXPECT_GE(a, b);
        }
        EXPECT_EQ(full.sigma.rows(), m.rows());
        EXPECT_EQ(full.sigma.cols(), m.cols());
    }
}

TEST(Factorizations, OrthogonalDiagonalizationRandomCorpus) {
    std::mt19937 rng(67);
    for (int i = 0; i < 30; ++i) {
        int n = 2 + i % 3;
        auto eigs = exfact::testing::random_positive_descending(rng, n);
        if (i % 2) eigs[n - 1] = -eigs[n - 1];
        Matrix<Rational> a = exfact::testing::symmetric_with_spectrum(rng, eigs);
        OrthogonalDiagonalization od = orthogonal_diagonalize(a);
        expect_orthonormal(od.p);
        EXPECT_EQ(matmul(matmul(od.p, to_radical(od.d)), transpose(od.p)), to_radical(a));
    }
}
