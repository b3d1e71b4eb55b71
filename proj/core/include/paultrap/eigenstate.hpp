#pragma once

#include <complex>

#include "paultrap/hermite.hpp"
#include "paultrap/oscillator.hpp"

namespace paultrap {

enum class Space { position, momentum };

/// Number of oscillator lengths (or momentum scales) covered on each side of
/// the origin by the default evaluation window; Gaussian tails are below
/// 1e-30 there.
inline constexpr double kDefaultWindowLengths = 12.0;

/// n-th stationary state of the effective oscillator in both representations.
class Eigenstate {
public:
    /// Throws DomainError for n < 0.
    Eigenstate(const EffectiveOscillator& eff, int n);

    const EffectiveOscillator& oscillator() const noexcept { return eff_; }
    int n() const noexcept { return n_; }

    /// m omega_eff / hbar
    double beta_x() const noexcept { return eff_.inverse_length_sq(); }
    /// 1 / (m hbar omega_eff)
    double beta_p() const noexcept { return eff_.inverse_momentum_sq(); }

    double beta(Space space) const noexcept {
        return space == Space::position ? beta_x() : beta_p();
    }

    /// psi_n(x) and d psi_n / dx.
    HermiteFunctionValue position_amplitude(double x) const;

    /// Real envelope g_n(p) of the momentum amplitude phi_n(p) = (-i)^n g_n(p),
    /// with its p-derivative.
    HermiteFunctionValue momentum_envelope(double p) const;

    /// phi_n(p) including the (-i)^n phase of the Fourier transform
    /// (2 pi hbar)^(-1/2) int psi_n(x) exp(-i p x / hbar) dx.
    std::complex<double> momentum_amplitude(double p) const;

    /// Real amplitude in the requested representation (psi_n or g_n).
    HermiteFunctionValue amplitude(Space space, double coordinate) const;

    /// Default symmetric window half-width: 12 osc lengths, or 12 hbar / osc_length.
    double window_half_width(Space space) const noexcept;

private:
    EffectiveOscillator eff_;
    int n_;
};

/// |psi_n(x)|^2
double position_density(const Eigenstate& state, double x);

/// |phi_n(p)|^2
double momentum_density(const Eigenstate& state, double p);

struct FourierCheck {
    double density = 0.0;
    bool converged = false;
};

inline constexpr int kMaxFourierCheckOrder = 30;

/// Momentum density obtained by numerically Fourier transforming psi_n with
/// the adaptive trapezoid rule (real and imaginary parts separately).
/// Throws DomainError for n > 30.
FourierCheck fourier_check(const Eigenstate& state, double p, double tol = 1e-13);

/// Sign changes of psi_n sampled on `points` equally spaced points over
/// +-half_width_lengths oscillator lengths.
int count_nodes(const Eigenstate& state, int points = 20001, double half_width_lengths = 10.0);

}  // namespace paultrap
