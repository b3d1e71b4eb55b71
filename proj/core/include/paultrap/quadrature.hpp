#pragma once

#include <functional>
#include <vector>

namespace paultrap {

enum class RuleKind { gauss_hermite, gauss_legendre };

/// Fixed Gaussian quadrature rule.
///
/// For Gauss-Hermite, `weights` integrate against exp(-x^2):
///   int f(x) exp(-x^2) dx ~ sum w_i f(x_i),
/// and `scaled_weights` = w_i exp(x_i^2) integrate an unweighted integrand:
///   int g(x) dx ~ sum W_i g(x_i).
/// Beyond q ~ 300 the outermost `weights` underflow binary64 and read 0;
/// `scaled_weights` stay representable for every supported order.
/// For Gauss-Legendre on [-1, 1] both vectors are identical.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> scaled_weights;
    int order = 0;
    RuleKind kind = RuleKind::gauss_hermite;

    /// sum_i w_i f(x_i)
    double weighted_sum(const std::function<double(double)>& f) const;
    /// sum_i W_i f(x_i)
    double scaled_sum(const std::function<double(double)>& f) const;
};

inline constexpr int kMaxGaussHermiteOrder = 512;

/// q-point Gauss-Hermite rule, 1 <= q <= 512. Nodes come from the Jacobi
/// matrix eigenvalues (Golub-Welsch) and are then polished by Newton steps on
/// the normalized Hermite function; weights use the Christoffel formula in
/// log space. Throws ConvergenceError if polishing fails.
QuadratureRule gauss_hermite_rule(int q);

/// q-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre_rule(int q);

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    long evaluations = 0;
};

/// Trapezoid rule on [-half_width, half_width] with repeated interval
/// doubling until two successive estimates differ by less than `tol`
/// (absolute). If the doubling budget runs out the last estimate is returned
/// with converged = false.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double half_width,
                                     double tol, int max_doublings = 22);

}  // namespace paultrap
