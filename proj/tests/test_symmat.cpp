#include "laptab/error.hpp"
#include "laptab/rng.hpp"
#include "laptab/symmat.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace laptab;

namespace {

constexpr double kTol = 1e-10;

SymMatrix path3_laplacian()
{
    return SymMatrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
}

SymMatrix random_symmetric(int n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m.set(i, j, rng.uniform(-1.0, 1.0));
    return m;
}

void expect_values(const Spectrum& s, const std::vector<double>& expected)
{
    ASSERT_EQ(s.size(), static_cast<int>(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i)
        EXPECT_NEAR(s.values[i], expected[i], kTol) << "index " << i;
}

} // namespace

TEST(SymMatrix, MirrorsUpperTriangle)
{
    const auto m = SymMatrix::from_rows({{1, 2}, {99, 3}});
    EXPECT_EQ(m(0, 1), 2.0);
    EXPECT_EQ(m(1, 0), 2.0);
    SymMatrix a(3);
    a.set(2, 0, 5.0);
    a.add(0, 2, 1.0);
    EXPECT_EQ(a(0, 2), 6.0);
    EXPECT_EQ(a(2, 0), 6.0);
}

TEST(SymMatrix, TraceNormAndProduct)
{
    const auto m = path3_laplacian();
    EXPECT_DOUBLE_EQ(m.trace(), 4.0);
    EXPECT_NEAR(m.frobenius_norm(), std::sqrt(10.0), 1e-15);
    const auto y = m.multiply(std::vector<double>{1, 1, 1});
    for (double v : y)
        EXPECT_DOUBLE_EQ(v, 0.0);
}

TEST(Jacobi, TrivialSpectra)
{
    expect_values(jacobi_eigen(SymMatrix::identity(3)), {1, 1, 1});
    expect_values(jacobi_eigen(SymMatrix::from_rows({{0, 1}, {1, 0}})), {1, -1});
    expect_values(jacobi_eigen(SymMatrix::from_rows({{2, 1}, {1, 2}})), {3, 1});
    expect_values(jacobi_eigen(path3_laplacian()), {3, 1, 0});
}

TEST(Jacobi, EmptyMatrixRejected)
{
    EXPECT_THROW(jacobi_eigen(SymMatrix(0)), Error);
}

TEST(Jacobi, RejectsNonFinite)
{
    SymMatrix m(2);
    m.set(0, 1, std::nan(""));
    try {
        jacobi_eigen(m);
        FAIL() << "expected NonFinite";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
    }
}

TEST(Jacobi, PathClosedForm)
{
    for (int n = 2; n <= 12; ++n) {
        SymMatrix l(n);
        for (int i = 0; i + 1 < n; ++i) {
            l.add(i, i, 1);
            l.add(i + 1, i + 1, 1);
            l.set(i, i + 1, -1);
        }
        std::vector<double> expected;
        for (int i = n - 1; i >= 0; --i) {
            const double s = std::sin(i * std::numbers::pi / (2.0 * n));
            expected.push_back(4.0 * s * s);
        }
        expect_values(jacobi_eigen(l), expected);
    }
}

// Eigenpairs, orthonormality and descending order on random input.
TEST(Jacobi, RandomEigenpairsProperty)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        const auto m = random_symmetric(n, seed);
        const auto s = jacobi_eigen(m);
        ASSERT_TRUE(s.vectors.has_value());
        EXPECT_LT(s.residual, 1e-9);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            sum += s.values[i];
            if (i > 0)
                EXPECT_GE(s.values[i - 1], s.values[i]);
            const auto vi = s.vector(i);
            const auto mv = m.multiply(vi);
            for (int r = 0; r < n; ++r)
                EXPECT_NEAR(mv[r], s.values[i] * vi[r], 1e-9);
            for (int j = 0; j < n; ++j) {
                const auto vj = s.vector(j);
                double dot = 0.0;
                for (int r = 0; r < n; ++r)
                    dot += vi[r] * vj[r];
                EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-9);
            }
        }
        EXPECT_NEAR(sum, m.trace(), 1e-9);
    }
}

TEST(Jacobi, ValuesOnlyAgreesWithVectors)
{
    const auto m = random_symmetric(7, 11);
    const auto a = jacobi_eigen(m, kJacobiTolerance, EigenMode::ValuesOnly);
    const auto b = jacobi_eigen(m);
    EXPECT_FALSE(a.vectors.has_value());
    for (int i = 0; i < 7; ++i)
        EXPECT_NEAR(a.values[i], b.values[i], 1e-12);
}

TEST(KyFan, SumsAndTails)
{
    const std::vector<double> s31{3, 1};
    EXPECT_DOUBLE_EQ(ky_fan_sum(s31, 1), 3);
    EXPECT_DOUBLE_EQ(ky_fan_sum(s31, 2), 4);
    EXPECT_NEAR(ky_fan_sum(jacobi_eigen(path3_laplacian()), 2), 4, kTol);
    const std::vector<double> s310{3, 1, 0};
    EXPECT_DOUBLE_EQ(tail_sum(s310, 1), 0);
    EXPECT_DOUBLE_EQ(tail_sum(s310, 3), 4);
    EXPECT_DOUBLE_EQ(tail_sum(std::vector<double>{1, -1}, 1), -1);
}

TEST(KyFan, RejectsBadK)
{
    const std::vector<double> s{3, 1};
    EXPECT_THROW(ky_fan_sum(s, 0), Error);
    EXPECT_THROW(ky_fan_sum(s, 3), Error);
    EXPECT_THROW(tail_sum(s, 3), Error);
}

TEST(Interlacing, Examples)
{
    const std::vector<int> rows12{1, 2};
    const std::vector<int> rows1{1};
    EXPECT_TRUE(check_interlacing(SymMatrix::identity(3), rows12));
    EXPECT_TRUE(check_interlacing(SymMatrix::from_rows({{0, 1}, {1, 0}}), rows1));
    EXPECT_TRUE(check_interlacing(path3_laplacian(), rows12));
}

TEST(Interlacing, RandomSubsetsProperty)
{
    SplitMix64 pick(5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 3 + static_cast<int>(seed % 6);
        const auto m = random_symmetric(n, 100 + seed);
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
            if (pick.below(2) == 1)
                rows.push_back(i);
        if (rows.empty())
            rows.push_back(0);
        EXPECT_TRUE(check_interlacing(m, rows));
    }
}

TEST(Subadditivity, ExamplesAndRandom)
{
    EXPECT_TRUE(check_subadditivity(SymMatrix::identity(2), SymMatrix::identity(2), 1));
    EXPECT_TRUE(check_subadditivity(SymMatrix::from_rows({{1, 0}, {0, -1}}), SymMatrix::from_rows({{-1, 0}, {0, 1}}), 1));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = random_symmetric(5, 2 * seed);
        const auto b = random_symmetric(5, 2 * seed + 1);
        for (int k = 1; k <= 5; ++k)
            EXPECT_TRUE(check_subadditivity(a, b, k)) << "seed " << seed << " k " << k;
    }
}

TEST(Restriction, Examples)
{
    const std::vector<double> ones3{1, 1, 1};
    const auto r = restrict_to_complement(SymMatrix::identity(3), ones3);
    ASSERT_EQ(r.order(), 2);
    expect_values(jacobi_eigen(r), {1, 1});
    EXPECT_NEAR(r(0, 1), 0.0, kTol);

    const auto k2 = restrict_to_complement(SymMatrix::from_rows({{1, -1}, {-1, 1}}), std::vector<double>{1, 1});
    ASSERT_EQ(k2.order(), 1);
    EXPECT_NEAR(k2(0, 0), 2.0, kTol);

    expect_values(jacobi_eigen(restrict_to_complement(path3_laplacian(), ones3)), {3, 1});
}

TEST(Restriction, RejectsZeroVector)
{
    EXPECT_THROW(restrict_to_complement(SymMatrix::identity(2), std::vector<double>{0, 0}), Error);
}

TEST(SpectralTolerance, ScalesWithNorm)
{
    EXPECT_DOUBLE_EQ(spectral_tolerance(SymMatrix(2)), 1e-9);
    SymMatrix big(1);
    big.set(0, 0, 1000.0);
    EXPECT_DOUBLE_EQ(spectral_tolerance(big), 1e-6);
}
