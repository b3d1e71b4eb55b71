#include "paultrap/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "paultrap/errors.hpp"

namespace paultrap {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(value));
    }
}

}  // namespace

void TrapConfig::validate() const {
    require_positive(mass, "mass");
    require_positive(trap_frequency, "trap_frequency (omega)");
    require_positive(lattice_period, "lattice_period (a)");
    require_positive(hbar, "hbar");
    // kappa = 1 leaves no curvature at the trap center.
    if (!(lattice_shape >= 0.0 && lattice_shape < 1.0)) {
        throw DomainError("lattice_shape (kappa) must satisfy 0 <= kappa < 1, got " +
                          std::to_string(lattice_shape));
    }
}

EffectiveOscillator::EffectiveOscillator(const TrapConfig& config) : config_(config) {
    config_.validate();
    const double m = config_.mass;
    const double w = config_.trap_frequency;
    const double a = config_.lattice_period;
    omega_eff_ = w * std::sqrt(1.0 - config_.lattice_shape);
    offset_lambda_ = m * w * w * a * a * config_.lattice_shape / (2.0 * std::numbers::pi * std::numbers::pi);
    osc_length_ = std::sqrt(config_.hbar / (m * omega_eff_));
    beta_x_ = m * omega_eff_ / config_.hbar;
    beta_p_ = 1.0 / (m * config_.hbar * omega_eff_);
    momentum_scale_ = std::sqrt(m * config_.hbar * omega_eff_);
}

EffectiveOscillator effective_oscillator(const TrapConfig& config) {
    return EffectiveOscillator(config);
}

double full_potential(const TrapConfig& config, double x) {
    const double m = config.mass;
    const double w = config.trap_frequency;
    const double a = config.lattice_period;
    const double kappa = config.lattice_shape;
    const double harmonic = 0.5 * m * w * w * x * x;
    if (kappa == 0.0) {
        return harmonic;
    }
    constexpr double pi = std::numbers::pi;
    const double lattice =
        m * w * w * a * a * (kappa / (4.0 * pi * pi)) * (1.0 + std::cos(2.0 * pi * x / a));
    return harmonic + lattice;
}

double truncated_potential(const EffectiveOscillator& eff, double x) {
    const double w = eff.omega_eff();
    return 0.5 * eff.mass() * w * w * x * x + eff.offset_lambda();
}

double energy_level(const EffectiveOscillator& eff, int n) {
    if (n < 0) {
        throw DomainError("quantum number n must be non-negative, got " + std::to_string(n));
    }
    return eff.hbar() * eff.omega_eff() * (n + 0.5) + eff.offset_lambda();
}

}  // namespace paultrap
