#pragma once

namespace paultrap {

/// Physicists' Hermite polynomial value and derivative with a factored-out
/// exponent: H_n(x) = value * exp(log_scale), H_n'(x) = derivative * exp(log_scale).
///
/// The scale is always a power of two, so rescaling is exact and the parity
/// H_n(-x) = (-1)^n H_n(x) holds bit for bit in (value, log_scale).
struct HermiteEval {
    int n = 0;
    double value = 0.0;
    double derivative = 0.0;
    double log_scale = 0.0;

    /// value * exp(log_scale); may overflow for large n and |x|.
    double unscaled_value() const;
    double unscaled_derivative() const;
};

HermiteEval hermite_polynomial(int n, double x);

/// Normalized Hermite function and its x-derivative.
struct HermiteFunctionValue {
    double value = 0.0;
    double derivative = 0.0;
};

/// Normalized eigenfunction of a harmonic oscillator whose Gaussian
/// parameter is beta = m omega / hbar:
///   psi_n(x) = (beta/pi)^(1/4) / sqrt(2^n n!) H_n(sqrt(beta) x) exp(-beta x^2 / 2).
/// Evaluated through the normalized three-term recurrence in log-scaled form,
/// so n up to a few hundred and |x| up to 30 oscillator lengths stay finite.
HermiteFunctionValue hermite_function(int n, double x, double inverse_length_sq);

/// Same as hermite_function but leaves the exponent factored out, for callers
/// that need log|psi_n| without underflow.
HermiteEval hermite_function_scaled(int n, double x, double inverse_length_sq);

}  // namespace paultrap
