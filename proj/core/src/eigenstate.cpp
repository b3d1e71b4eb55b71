#include "paultrap/eigenstate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "paultrap/errors.hpp"
#include "paultrap/quadrature.hpp"

namespace paultrap {

Eigenstate::Eigenstate(const EffectiveOscillator& eff, int n) : eff_(eff), n_(n) {
    if (n < 0) {
        throw DomainError("quantum number n must be non-negative, got " + std::to_string(n));
    }
}

HermiteFunctionValue Eigenstate::position_amplitude(double x) const {
    return hermite_function(n_, x, beta_x());
}

HermiteFunctionValue Eigenstate::momentum_envelope(double p) const {
    return hermite_function(n_, p, beta_p());
}

std::complex<double> Eigenstate::momentum_amplitude(double p) const {
    static constexpr std::complex<double> kPhase[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    return kPhase[n_ % 4] * momentum_envelope(p).value;
}

HermiteFunctionValue Eigenstate::amplitude(Space space, double coordinate) const {
    return space == Space::position ? position_amplitude(coordinate) : momentum_envelope(coordinate);
}

double Eigenstate::window_half_width(Space space) const noexcept {
    const double scale = space == Space::position ? eff_.osc_length() : eff_.momentum_scale();
    return kDefaultWindowLengths * scale;
}

double position_density(const Eigenstate& state, double x) {
    const double psi = state.position_amplitude(x).value;
    return psi * psi;
}

double momentum_density(const Eigenstate& state, double p) {
    const double g = state.momentum_envelope(p).value;
    return g * g;
}

FourierCheck fourier_check(const Eigenstate& state, double p, double tol) {
    if (state.n() > kMaxFourierCheckOrder) {
        throw DomainError("fourier_check supports n <= 30, got " + std::to_string(state.n()));
    }
    const double hbar = state.oscillator().hbar();
    const double half_width = state.window_half_width(Space::position);
    const double k = p / hbar;
    const IntegrationResult re = adaptive_integrate(
        [&](double x) { return state.position_amplitude(x).value * std::cos(k * x); }, half_width, tol);
    const IntegrationResult im = adaptive_integrate(
        [&](double x) { return -state.position_amplitude(x).value * std::sin(k * x); }, half_width, tol);
    const double norm = 1.0 / (2.0 * std::numbers::pi * hbar);
    return {norm * (re.value * re.value + im.value * im.value), re.converged && im.converged};
}

int count_nodes(const Eigenstate& state, int points, double half_width_lengths) {
    const double half_width = half_width_lengths * state.oscillator().osc_length();
    const double step = 2.0 * half_width / (points - 1);
    // Ignore tail noise far below the peak amplitude.
    const double floor = 1e-12 * std::pow(state.beta_x(), 0.25);
    int changes = 0;
    int last_sign = 0;
    for (int i = 0; i < points; ++i) {
        const double v = state.position_amplitude(-half_width + i * step).value;
        if (std::abs(v) < floor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

}  // namespace paultrap
