#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "paultrap/errors.hpp"
#include "paultrap/tridiagonal.hpp"

using namespace paultrap;

namespace {

// Cyclic Jacobi rotations on the dense matrix; independent of Sturm bisection.
std::vector<double> dense_jacobi_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
    const std::size_t n = d.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = d[i];
    for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = e[i];
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    std::sort(out.begin(), out.end());
    return out;
}

SymmetricTridiagonal laplacian(int n) {
    return SymmetricTridiagonal(std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0));
}

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

TEST(Tridiagonal, MatchesDenseJacobiOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial;
        std::vector<double> d(n), e(n - 1);
        for (double& x : d) x = u(rng);
        for (double& x : e) x = u(rng);
        const SymmetricTridiagonal t(d, e);
        const auto oracle = dense_jacobi_eigenvalues(d, e);
        const auto computed = t.lowest_eigenvalues(n);
        ASSERT_EQ(computed.size(), oracle.size());
        for (int k = 0; k < n; ++k) EXPECT_NEAR(computed[k], oracle[k], 1e-12) << "n=" << n << " k=" << k;
    }
}

TEST(Tridiagonal, DiscreteLaplacianSpectrum) {
    const int n = 500;
    const auto t = laplacian(n);
    for (int k = 0; k < 10; ++k) {
        const double exact = 2.0 - 2.0 * std::cos((k + 1) * std::numbers::pi / (n + 1));
        EXPECT_NEAR(t.eigenvalue(k), exact, 1e-14);
    }
}

TEST(Tridiagonal, SturmCountBracketsEigenvalues) {
    const auto t = laplacian(50);
    EXPECT_EQ(t.sturm_count(0.0), 0);
    EXPECT_EQ(t.sturm_count(4.0), 50);
    for (int k = 0; k < 50; k += 7) {
        const double lam = t.eigenvalue(k);
        EXPECT_EQ(t.sturm_count(lam - 1e-9), k);
        EXPECT_EQ(t.sturm_count(lam + 1e-9), k + 1);
    }
    const auto [lo, hi] = t.gershgorin_bounds();
    EXPECT_LE(lo, t.eigenvalue(0));
    EXPECT_GE(hi, t.eigenvalue(49));
}

TEST(Tridiagonal, EigenvectorsAreOrthonormalWithSmallResiduals) {
    const int n = 2000;
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) {
        const double x = -8.0 + 16.0 * i / (n - 1);
        d[i] = 2.0 / (0.008 * 0.008) * 0.5 + 0.5 * x * x;
    }
    const SymmetricTridiagonal t(d, std::vector<double>(n - 1, -0.5 / (0.008 * 0.008)));
    std::vector<std::vector<double>> found;
    for (int k = 0; k < 6; ++k) {
        const double lam = t.eigenvalue(k);
        auto r = t.eigenvector(lam, found);
        ASSERT_TRUE(r.converged);
        EXPECT_NEAR(norm(r.vector), 1.0, 1e-12);
        const auto tv = t.multiply(r.vector);
        double res = 0;
        for (int i = 0; i < n; ++i) res += std::pow(tv[i] - lam * r.vector[i], 2);
        EXPECT_LT(std::sqrt(res), 1e-9 * t.gershgorin_bounds().second);
        for (const auto& prev : found) {
            double dot = 0;
            for (int i = 0; i < n; ++i) dot += prev[i] * r.vector[i];
            EXPECT_LT(std::abs(dot), 1e-10);
        }
        found.push_back(std::move(r.vector));
    }
}

TEST(Tridiagonal, DegenerateDiagonalMatrix) {
    const SymmetricTridiagonal t({3.0, 1.0, 2.0}, {0.0, 0.0});
    EXPECT_DOUBLE_EQ(t.eigenvalue(0), 1.0);
    EXPECT_DOUBLE_EQ(t.eigenvalue(1), 2.0);
    EXPECT_DOUBLE_EQ(t.eigenvalue(2), 3.0);
    const auto r = t.eigenvector(1.0);
    EXPECT_NEAR(std::abs(r.vector[1]), 1.0, 1e-12);
}

TEST(Tridiagonal, RejectsInconsistentShapes) {
    EXPECT_THROW(SymmetricTridiagonal({1.0, 2.0}, {0.1, 0.2}), std::invalid_argument);
    EXPECT_THROW(SymmetricTridiagonal({}, {}), std::invalid_argument);
    EXPECT_THROW(laplacian(5).eigenvalue(5), DomainError);
}
