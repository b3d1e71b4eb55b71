#pragma once

#include "paultrap/eigenstate.hpp"
#include "paultrap/oscillator.hpp"

namespace paultrap {

enum class Method { closed_form, quadrature };

/// Which numerical route evaluates an integral over a state density.
///  - gauss_hermite: Gauss-Hermite rule scaled to the state width; exact for the
///    polynomial-times-Gaussian integrands of Fisher information, moments and
///    normalization. For entropies, whose integrand has log singularities at the
///    wavefunction nodes, the line is split at the nodes (the order-n
///    Gauss-Hermite abscissae) and composite Gauss-Legendre panels are used.
///  - trapezoid: adaptive trapezoid with interval doubling over +-12 widths.
enum class QuadratureScheme { gauss_hermite, trapezoid };

inline constexpr int kMaxQuadratureOrder = 30;

struct QuadratureOptions {
    /// Trapezoid stopping tolerance, relative to the natural scale of each
    /// integral (beta for Fisher information, 1/beta for second moments, 1
    /// for normalization and entropy).
    double tolerance = 1e-12;
    /// Trapezoid interval-doubling budget; exhausting it marks the result unconverged.
    int max_doublings = 22;
    /// Gauss-Hermite order used for state n is n + 2 + extra_gauss_order.
    int extra_gauss_order = 8;
    QuadratureScheme fisher_scheme = QuadratureScheme::gauss_hermite;
    QuadratureScheme moment_scheme = QuadratureScheme::gauss_hermite;
    QuadratureScheme entropy_scheme = QuadratureScheme::trapezoid;
};

struct FisherInformation {
    double position = 0.0;
    double momentum = 0.0;
    bool converged = true;
};

struct Moments {
    double x_mean = 0.0;
    double p_mean = 0.0;
    double x2_mean = 0.0;
    double p2_mean = 0.0;
    double uncertainty = 0.0;  ///< Delta x * Delta p
    bool converged = true;
};

struct ShannonEntropy {
    double position = 0.0;
    double momentum = 0.0;
    bool converged = true;
};

struct FisherShannon {
    double power_x = 0.0;
    double power_p = 0.0;
    double complexity_x = 0.0;
    double complexity_p = 0.0;
};

/// Every information measure for one (state, config). Entries that a method
/// cannot produce (closed-form entropies of excited states and everything
/// derived from them) are NaN.
struct MeasureSet {
    double fisher_x = 0.0;
    double fisher_p = 0.0;
    double entropy_x = 0.0;
    double entropy_p = 0.0;
    double x2_mean = 0.0;
    double p2_mean = 0.0;
    double uncertainty = 0.0;
    double power_x = 0.0;
    double power_p = 0.0;
    double complexity_x = 0.0;
    double complexity_p = 0.0;
    Method method = Method::closed_form;
    bool converged = true;

    double fisher_product() const noexcept { return fisher_x * fisher_p; }

    /// Bitwise equality of every field (NaN compares equal to NaN).
    bool identical_to(const MeasureSet& other) const noexcept;
};

// Closed forms ---------------------------------------------------------------

/// I_x = (2 m omega_eff / hbar)(2n+1), I_p = (2 / (m hbar omega_eff))(2n+1).
FisherInformation fisher_closed(const EffectiveOscillator& eff, int n);

/// <x^2> = hbar(2n+1)/(2 m omega_eff), <p^2> = m hbar omega_eff (2n+1)/2,
/// Delta x Delta p = hbar (n + 1/2).
Moments moments_closed(const EffectiveOscillator& eff, int n);

/// Ground-state differential entropies in nats.
ShannonEntropy shannon_closed_ground(const EffectiveOscillator& eff);

// Quadrature -----------------------------------------------------------------

/// 4 int (d psi/dx)^2 dx and 4 int (d phi/dp)^2 dp with analytic derivatives.
FisherInformation fisher_numeric(const Eigenstate& state,
                                 QuadratureScheme scheme = QuadratureScheme::gauss_hermite,
                                 const QuadratureOptions& options = {});

Moments moments_numeric(const Eigenstate& state,
                        QuadratureScheme scheme = QuadratureScheme::gauss_hermite,
                        const QuadratureOptions& options = {});

/// -int rho ln rho with 0 ln 0 = 0.
ShannonEntropy shannon_numeric(const Eigenstate& state,
                               QuadratureScheme scheme = QuadratureScheme::trapezoid,
                               const QuadratureOptions& options = {});

struct Normalization {
    double position = 0.0;
    double momentum = 0.0;
    bool converged = true;
};

Normalization normalization_numeric(const Eigenstate& state,
                                    QuadratureScheme scheme = QuadratureScheme::gauss_hermite,
                                    const QuadratureOptions& options = {});

// Derived --------------------------------------------------------------------

/// Shannon powers J = exp(2S)/(2 pi e) and complexities P = J I.
/// Throws DomainError if the entropies or Fisher entries are missing.
FisherShannon fisher_shannon(const MeasureSet& measure);

MeasureSet closed_form_measures(const EffectiveOscillator& eff, int n);

MeasureSet quadrature_measures(const Eigenstate& state, const QuadratureOptions& options = {});

MeasureSet compute_measures(const EffectiveOscillator& eff, int n, Method method,
                            const QuadratureOptions& options = {});

}  // namespace paultrap
