#include <gtest/gtest.h>

#include <cmath>

#include "paultrap/eigenstate.hpp"
#include "paultrap/errors.hpp"
#include "paultrap/oscillator.hpp"
#include "paultrap/truncation.hpp"

using namespace paultrap;

namespace {

TrapConfig config(double omega, double kappa, double period = 1.0) {
    return TrapConfig{1.0, omega, kappa, period, 1.0};
}

}  // namespace

TEST(Discretize, RejectsUnusableGrids) {
    const auto c = config(1.0, 0.2);
    const double ell = EffectiveOscillator(c).osc_length();
    EXPECT_THROW(discretize(c, PotentialKind::full, 10 * ell, 4000), DomainError);
    EXPECT_THROW(discretize(c, PotentialKind::full, 10 * ell, 99), DomainError);
    EXPECT_THROW(discretize(c, PotentialKind::full, 7.9 * ell, 4001), DomainError);
    EXPECT_NO_THROW(discretize(c, PotentialKind::full, 8 * ell, 101));
}

TEST(Discretize, GridIsSymmetric) {
    const auto h = discretize(config(2.0, 0.6), PotentialKind::full, 10.0, 2001);
    ASSERT_EQ(h.diagonal.size(), 2001u);
    EXPECT_EQ(h.grid_point(1000), 0.0);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(h.diagonal[i], h.diagonal[2000 - i]);
    EXPECT_NEAR(h.spacing(), 0.01, 1e-15);
    EXPECT_NEAR(h.off_diagonal, -0.5 / (0.01 * 0.01), 1e-6);
}

TEST(Discretize, TruncatedGroundEnergyOnDefaultGrid) {
    const auto c = config(2.0, 0.2);
    const EffectiveOscillator eff(c);
    const auto h = discretize(c, PotentialKind::truncated, 10 * eff.osc_length(), 4001);
    const double e0 = h.matrix().eigenvalue(0);
    // three-point stencil error at this spacing is 1.5e-6 relative
    EXPECT_NEAR(e0, 0.934956, 2e-6 * 0.934956);
    const auto v = validate_truncation(c, 1);
    EXPECT_NEAR(v.truncated_levels[0], 0.93495566445685099, 1e-6 * 0.934956);
    EXPECT_NEAR(v.truncated_levels[0], 0.93495566445685099, 1e-9);
}

TEST(Discretize, BareOscillatorLevels) {
    const auto h = discretize(config(1.0, 0.0), PotentialKind::truncated, 10.0, 40001);
    const auto pairs = lowest_eigenpairs(h, 4);
    ASSERT_TRUE(pairs.all_converged());
    for (int n = 0; n < 4; ++n) EXPECT_NEAR(pairs.energies[n], n + 0.5, 1e-6);
}

TEST(Discretize, SturmCountBelowFirstExcitedLevel) {
    const auto h = discretize(config(1.0, 0.0), PotentialKind::truncated, 10.0, 4001);
    EXPECT_EQ(h.matrix().sturm_count(1.0), 1);
    EXPECT_EQ(h.matrix().sturm_count(2.0), 2);
}

TEST(Eigenpairs, GroundVectorMatchesAnalyticState) {
    const auto c = config(1.0, 0.0);
    const auto h = discretize(c, PotentialKind::truncated, 10.0, 4001);
    const auto pairs = lowest_eigenpairs(h, 1);
    const Eigenstate s(EffectiveOscillator(c), 0);
    double err = 0.0;
    for (int i = 0; i < h.num_points; ++i) {
        err += std::pow(pairs.wavefunctions[0][i] - s.position_amplitude(h.grid_point(i)).value, 2);
    }
    EXPECT_LT(std::sqrt(err * h.spacing()), 1e-5);
}

TEST(Eigenpairs, NodeCountsAndNormalization) {
    const auto h = discretize(config(2.0, 0.4), PotentialKind::full, 8.0, 3001);
    const auto pairs = lowest_eigenpairs(h, 6);
    for (int k = 0; k < 6; ++k) {
        const auto& v = pairs.wavefunctions[k];
        int nodes = 0;
        double norm = 0.0, peak = 0.0;
        for (double x : v) peak = std::max(peak, std::abs(x));
        for (std::size_t i = 0; i < v.size(); ++i) {
            norm += v[i] * v[i];
            if (i > 0 && v[i] * v[i - 1] < 0 && std::abs(v[i]) + std::abs(v[i - 1]) > 1e-8 * peak) ++nodes;
        }
        EXPECT_EQ(nodes, k);
        EXPECT_NEAR(norm * pairs.spacing, 1.0, 1e-10);
    }
    EXPECT_THROW(lowest_eigenpairs(h, 21), DomainError);
    EXPECT_THROW(lowest_eigenpairs(h, 0), DomainError);
}

TEST(Eigenpairs, SecondOrderConvergence) {
    const auto c = config(1.0, 0.0);
    double errs[3];
    int i = 0;
    for (int points : {1001, 2001, 4001}) {
        const auto h = discretize(c, PotentialKind::truncated, 10.0, points);
        errs[i++] = std::abs(h.matrix().eigenvalue(0) - 0.5);
    }
    EXPECT_NEAR(errs[0] / errs[1], 4.0, 0.5);
    EXPECT_NEAR(errs[1] / errs[2], 4.0, 0.5);
}

TEST(Validate, NoLatticeMeansNoDiscrepancy) {
    const auto v = validate_truncation(config(1.0, 0.0), 5);
    ASSERT_EQ(v.level_errors.size(), 5u);
    for (double e : v.level_errors) EXPECT_LT(e, 1e-10);
    EXPECT_LT(v.ground_density_l2_error, 1e-10);
    EXPECT_TRUE(v.converged);
}

TEST(Validate, TruncatedModelMatchesClosedForm) {
    const auto v = validate_truncation(config(2.0, 0.2), 4);
    ASSERT_TRUE(v.extrapolated);
    for (int n = 0; n < 4; ++n) {
        EXPECT_LT(v.truncated_level_errors[n], 1e-6);
        EXPECT_LT(std::abs(v.truncated_raw_levels[n] - v.analytic_levels[n]) / v.analytic_levels[n], 1e-5);
    }
    EXPECT_NEAR(v.regime_ratio, EffectiveOscillator(config(2.0, 0.2)).osc_length(), 1e-15);
}

TEST(Validate, DiscrepancyGrowsWithLatticeStrength) {
    double prev = -1.0;
    for (double kappa : {0.1, 0.2, 0.4, 0.6, 0.8}) {
        const auto v = validate_truncation(config(1.0, kappa), 1);
        EXPECT_GT(v.level_errors[0], prev) << kappa;
        prev = v.level_errors[0];
    }
}

TEST(Validate, DiscrepancyGrowsWithQuantumNumber) {
    const auto v = validate_truncation(config(2.0, 0.2, 4.0), 5);
    for (int n = 1; n < 5; ++n) EXPECT_GT(v.level_errors[n], v.level_errors[n - 1]) << n;
}

TEST(Validate, ResultIsGridConverged) {
    const auto c = config(1.5, 0.3);
    ValidationOptions coarse;
    ValidationOptions fine;
    fine.num_points = 8001;
    const auto a = validate_truncation(c, 3, coarse);
    const auto b = validate_truncation(c, 3, fine);
    for (int n = 0; n < 3; ++n) {
        EXPECT_NEAR(a.numeric_levels[n], b.numeric_levels[n], 1e-8);
        EXPECT_NEAR(a.level_errors[n], b.level_errors[n], 1e-8);
    }
}

TEST(Validate, RejectsBadRequests) {
    EXPECT_THROW(validate_truncation(config(1.0, 0.2), 0), DomainError);
    EXPECT_THROW(validate_truncation(config(1.0, 0.2), 21), DomainError);
    EXPECT_THROW(validate_truncation(config(1.0, 1.0), 1), DomainError);
}
