#pragma once

namespace paultrap {

/// Physical parameters of a Paul trap overlaid with an optical lattice.
///
/// The default-constructed value is the natural-unit profile m = hbar = a = 1
/// with omega = 1 and no lattice.
struct TrapConfig {
    double mass = 1.0;
    double trap_frequency = 1.0;  ///< omega, angular frequency of the bare trap
    double lattice_shape = 0.0;   ///< kappa, 0 <= kappa < 1
    double lattice_period = 1.0;  ///< a
    double hbar = 1.0;

    /// Throws DomainError naming the first offending parameter.
    void validate() const;

    friend bool operator==(const TrapConfig&, const TrapConfig&) = default;
};

/// Harmonic reduction of the trap around its center: the curvature
/// omega_eff = omega * sqrt(1 - kappa), the constant baseline offset lambda,
/// and the oscillator length sqrt(hbar / (m omega_eff)).
class EffectiveOscillator {
public:
    explicit EffectiveOscillator(const TrapConfig& config);

    const TrapConfig& config() const noexcept { return config_; }
    double mass() const noexcept { return config_.mass; }
    double hbar() const noexcept { return config_.hbar; }

    double omega_eff() const noexcept { return omega_eff_; }
    double offset_lambda() const noexcept { return offset_lambda_; }
    double osc_length() const noexcept { return osc_length_; }

    /// m omega_eff / hbar, the Gaussian parameter of position-space states.
    double inverse_length_sq() const noexcept { return beta_x_; }
    /// 1 / (m hbar omega_eff), the Gaussian parameter of momentum-space states.
    double inverse_momentum_sq() const noexcept { return beta_p_; }
    /// sqrt(m hbar omega_eff) = hbar / osc_length.
    double momentum_scale() const noexcept { return momentum_scale_; }

    /// osc_length / lattice_period; small values mean the harmonic truncation
    /// is expected to hold.
    double regime_ratio() const noexcept { return osc_length_ / config_.lattice_period; }

private:
    TrapConfig config_;
    double omega_eff_;
    double offset_lambda_;
    double osc_length_;
    double beta_x_;
    double beta_p_;
    double momentum_scale_;
};

EffectiveOscillator effective_oscillator(const TrapConfig& config);

/// Harmonic trap plus the cosine lattice term.
double full_potential(const TrapConfig& config, double x);

/// Second-order Taylor truncation of full_potential around x = 0.
double truncated_potential(const EffectiveOscillator& eff, double x);

/// E_n = hbar omega_eff (n + 1/2) + lambda. Throws DomainError for n < 0.
double energy_level(const EffectiveOscillator& eff, int n);

}  // namespace paultrap
