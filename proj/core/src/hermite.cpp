#include "paultrap/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "paultrap/errors.hpp"

namespace paultrap {

namespace {

constexpr int kRescaleExponent = 256;
const double kRescaleThreshold = std::ldexp(1.0, kRescaleExponent);

void require_order(int n) {
    if (n < 0) {
        throw DomainError("Hermite order must be non-negative, got " + std::to_string(n));
    }
}

// value * exp(log_scale) without intermediate overflow or underflow.
double combine(double value, double log_scale) {
    if (value == 0.0) {
        return 0.0;
    }
    int exponent = 0;
    const double fraction = std::frexp(value, &exponent);
    return fraction * std::exp(log_scale + exponent * std::numbers::ln2);
}

}  // namespace

double HermiteEval::unscaled_value() const { return combine(value, log_scale); }

double HermiteEval::unscaled_derivative() const { return combine(derivative, log_scale); }

HermiteEval hermite_polynomial(int n, double x) {
    require_order(n);
    HermiteEval out;
    out.n = n;
    double previous = 1.0;  // H_0
    if (n == 0) {
        out.value = 1.0;
        return out;
    }
    double current = 2.0 * x;  // H_1
    int exponent = 0;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * current - 2.0 * k * previous;
        previous = current;
        current = next;
        if (std::abs(current) > kRescaleThreshold) {
            current = std::ldexp(current, -kRescaleExponent);
            previous = std::ldexp(previous, -kRescaleExponent);
            exponent += kRescaleExponent;
        }
    }
    out.value = current;
    out.derivative = 2.0 * n * previous;
    out.log_scale = exponent * std::numbers::ln2;
    return out;
}

HermiteEval hermite_function_scaled(int n, double x, double inverse_length_sq) {
    require_order(n);
    if (!(inverse_length_sq > 0.0)) {
        throw DomainError("inverse_length_sq must be positive");
    }
    const double root_beta = std::sqrt(inverse_length_sq);
    const double y = root_beta * x;

    // Mantissas of h_{k-1}, h_k relative to h_0(y) = pi^(-1/4) exp(-y^2/2).
    double previous = 0.0;
    double current = 1.0;
    int exponent = 0;
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * y * current -
                            std::sqrt(static_cast<double>(k) / (k + 1)) * previous;
        previous = current;
        current = next;
        if (std::abs(current) > kRescaleThreshold) {
            current = std::ldexp(current, -kRescaleExponent);
            previous = std::ldexp(previous, -kRescaleExponent);
            exponent += kRescaleExponent;
        }
    }

    HermiteEval out;
    out.n = n;
    out.value = current;
    // h_n'(y) = sqrt(2n) h_{n-1}(y) - y h_n(y); chain rule adds sqrt(beta).
    out.derivative = root_beta * (std::sqrt(2.0 * n) * previous - y * current);
    out.log_scale = exponent * std::numbers::ln2 - 0.5 * y * y +
                    0.25 * std::log(inverse_length_sq / std::numbers::pi);
    return out;
}

HermiteFunctionValue hermite_function(int n, double x, double inverse_length_sq) {
    const HermiteEval scaled = hermite_function_scaled(n, x, inverse_length_sq);
    return {scaled.unscaled_value(), scaled.unscaled_derivative()};
}

}  // namespace paultrap
