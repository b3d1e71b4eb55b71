#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "paultrap/eigenstate.hpp"
#include "paultrap/errors.hpp"
#include "paultrap/measures.hpp"

using namespace paultrap;

namespace {

EffectiveOscillator osc(double omega, double kappa) {
    return EffectiveOscillator(TrapConfig{1.0, omega, kappa, 1.0, 1.0});
}

}  // namespace

TEST(Eigenstate, GroundPositionPeak) {
    const Eigenstate s(osc(2.0, 0.5), 0);
    EXPECT_NEAR(position_density(s, 0.0), std::sqrt(std::sqrt(2.0) / std::numbers::pi), 1e-15);
    EXPECT_NEAR(position_density(s, 0.0), 0.670938, 5e-7);
}

TEST(Eigenstate, GroundMomentumPeak) {
    const Eigenstate s(osc(1.0, 0.0), 0);
    EXPECT_NEAR(momentum_density(s, 0.0), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
}

TEST(Eigenstate, LatticeBroadensPositionAndNarrowsMomentum) {
    double prev_x = 1e9, prev_p = 0.0;
    for (double kappa : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        const Eigenstate s(osc(1.0, kappa), 0);
        EXPECT_LT(position_density(s, 0.0), prev_x);
        EXPECT_GT(momentum_density(s, 0.0), prev_p);
        prev_x = position_density(s, 0.0);
        prev_p = momentum_density(s, 0.0);
    }
}

TEST(Eigenstate, MomentumIsPositionAtReciprocalCurvature) {
    const auto eff = osc(2.0, 0.2);
    const auto dual = osc(1.0 / eff.omega_eff(), 0.0);
    for (int n = 0; n <= 8; ++n) {
        const Eigenstate a(eff, n), b(dual, n);
        for (double q : {-3.0, -0.7, 0.0, 0.4, 2.2}) {
            EXPECT_NEAR(momentum_density(a, q), position_density(b, q), 1e-12);
        }
    }
}

TEST(Eigenstate, NumericFourierTransformReferenceValues) {
    // mpmath densities of the transformed Hermite functions
    const Eigenstate s1(osc(1.0, 0.5), 1);
    const FourierCheck c1 = fourier_check(s1, 0.7);
    EXPECT_TRUE(c1.converged);
    EXPECT_NEAR(c1.density, 0.4650213732906988, 1e-10);
    EXPECT_NEAR(momentum_density(s1, 0.7), 0.4650213732906988, 1e-14);

    const Eigenstate s4(osc(2.0, 0.2), 4);
    const FourierCheck c4 = fourier_check(s4, -1.1);
    EXPECT_TRUE(c4.converged);
    EXPECT_NEAR(c4.density, 0.09654104011909832, 1e-10);
    EXPECT_NEAR(momentum_density(s4, -1.1), 0.09654104011909832, 1e-14);
}

TEST(Eigenstate, NumericFourierTransformAgreesWithClosedForm) {
    for (int n : {0, 2, 5, 9}) {
        const Eigenstate s(osc(1.5, 0.35), n);
        for (double p : {0.0, 0.3, -1.7, 2.9}) {
            const FourierCheck c = fourier_check(s, p);
            EXPECT_TRUE(c.converged);
            EXPECT_NEAR(c.density, momentum_density(s, p), 1e-8) << "n=" << n << " p=" << p;
        }
    }
    EXPECT_THROW(fourier_check(Eigenstate(osc(1.0, 0.0), 31), 0.0), DomainError);
}

TEST(Eigenstate, MomentumPhase) {
    const Eigenstate s(osc(1.0, 0.3), 0);
    for (int n = 0; n < 8; ++n) {
        const Eigenstate st(osc(1.0, 0.3), n);
        const double g = st.momentum_envelope(0.8).value;
        std::complex<double> phase(1.0, 0.0);
        for (int k = 0; k < n; ++k) phase *= std::complex<double>(0.0, -1.0);
        const auto phi = st.momentum_amplitude(0.8);
        EXPECT_NEAR(phi.real(), phase.real() * g, 1e-15);
        EXPECT_NEAR(phi.imag(), phase.imag() * g, 1e-15);
    }
    EXPECT_EQ(s.momentum_amplitude(0.2).imag(), 0.0);
}

TEST(Eigenstate, NormalizedInBothSpaces) {
    for (int n : {0, 1, 4, 10, 30}) {
        for (double kappa : {0.0, 0.5, 0.9}) {
            const Eigenstate s(osc(1.7, kappa), n);
            const Normalization gh = normalization_numeric(s, QuadratureScheme::gauss_hermite);
            EXPECT_NEAR(gh.position, 1.0, 1e-10);
            EXPECT_NEAR(gh.momentum, 1.0, 1e-10);
            const Normalization tr = normalization_numeric(s, QuadratureScheme::trapezoid);
            EXPECT_TRUE(tr.converged);
            EXPECT_NEAR(tr.position, 1.0, 1e-10);
            EXPECT_NEAR(tr.momentum, 1.0, 1e-10);
        }
    }
}

TEST(Eigenstate, ParityOfDensities) {
    for (int n = 0; n <= 12; ++n) {
        const Eigenstate s(osc(1.1, 0.4), n);
        for (double q : {0.1, 0.9, 2.3}) {
            EXPECT_EQ(position_density(s, q), position_density(s, -q));
            EXPECT_EQ(momentum_density(s, q), momentum_density(s, -q));
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            EXPECT_EQ(s.position_amplitude(-q).value, sign * s.position_amplitude(q).value);
        }
    }
}

TEST(Eigenstate, NodeCountEqualsQuantumNumber) {
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(count_nodes(Eigenstate(osc(2.0, 0.3), n)), n);
    }
}

TEST(Eigenstate, WindowScalesWithOscillatorLength) {
    const auto eff = osc(2.0, 0.2);
    const Eigenstate s(eff, 0);
    EXPECT_NEAR(s.window_half_width(Space::position), 12.0 * eff.osc_length(), 1e-14);
    EXPECT_NEAR(s.window_half_width(Space::momentum), 12.0 / eff.osc_length(), 1e-14);
    EXPECT_THROW(Eigenstate(eff, -1), DomainError);
}
