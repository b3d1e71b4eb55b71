#include "paultrap/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "paultrap/errors.hpp"
#include "paultrap/hermite.hpp"
#include "paultrap/tridiagonal.hpp"

namespace paultrap {

namespace {

constexpr int kNewtonBudget = 40;

// Jacobi-matrix eigenvalues in ascending order.
std::vector<double> jacobi_eigenvalues(std::vector<double> off_diagonal) {
    const std::size_t q = off_diagonal.size() + 1;
    SymmetricTridiagonal jacobi(std::vector<double>(q, 0.0), std::move(off_diagonal));
    return jacobi.lowest_eigenvalues(static_cast<int>(q));
}

template <class Step>
double polish(double x, Step&& newton_step, const char* family, int q) {
    for (int iter = 0; iter < kNewtonBudget; ++iter) {
        const double dx = newton_step(x);
        x -= dx;
        // Quadratic convergence: once a step is this small the next one is at rounding level.
        if (std::abs(dx) <= 1e-12 * std::max(1.0, std::abs(x))) {
            return x;
        }
    }
    throw ConvergenceError(std::string(family) + " node polishing did not converge for q = " +
                           std::to_string(q));
}

// Rules from these families are symmetric; enforce it exactly.
void symmetrize(std::vector<double>& nodes) {
    const std::size_t q = nodes.size();
    for (std::size_t i = 0; i < q / 2; ++i) {
        const double half = 0.5 * (nodes[q - 1 - i] - nodes[i]);
        nodes[i] = -half;
        nodes[q - 1 - i] = half;
    }
    if (q % 2 == 1) nodes[q / 2] = 0.0;
}

}  // namespace

double QuadratureRule::weighted_sum(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
}

double QuadratureRule::scaled_sum(const std::function<double(double)>& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += scaled_weights[i] * f(nodes[i]);
    return sum;
}

QuadratureRule gauss_hermite_rule(int q) {
    if (q < 1 || q > kMaxGaussHermiteOrder) {
        throw DomainError("Gauss-Hermite order must be in [1, 512], got " + std::to_string(q));
    }
    std::vector<double> off(q - 1);
    for (int k = 1; k < q; ++k) off[k - 1] = std::sqrt(0.5 * k);
    std::vector<double> nodes = jacobi_eigenvalues(std::move(off));

    // Roots of the normalized Hermite function h_q; the step h_q / h_q' is
    // independent of the common log scale.
    auto step = [q](double x) {
        const HermiteEval h = hermite_function_scaled(q, x, 1.0);
        return h.value / h.derivative;
    };
    for (auto& x : nodes) x = polish(x, step, "Gauss-Hermite", q);
    symmetrize(nodes);

    QuadratureRule rule;
    rule.order = q;
    rule.kind = RuleKind::gauss_hermite;
    rule.nodes = nodes;
    rule.weights.resize(q);
    rule.scaled_weights.resize(q);
    for (int i = 0; i < q; ++i) {
        // Christoffel number: w_i exp(x_i^2) = 1 / (q h_{q-1}(x_i)^2).
        const double x = std::abs(nodes[i]);
        const HermiteEval h = hermite_function_scaled(q - 1, x, 1.0);
        const double log_abs = std::log(std::abs(h.value)) + h.log_scale;
        const double log_scaled = -std::log(static_cast<double>(q)) - 2.0 * log_abs;
        rule.scaled_weights[i] = std::exp(log_scaled);
        rule.weights[i] = std::exp(log_scaled - x * x);
    }
    return rule;
}

QuadratureRule gauss_legendre_rule(int q) {
    if (q < 1) {
        throw DomainError("Gauss-Legendre order must be positive, got " + std::to_string(q));
    }
    std::vector<double> off(q - 1);
    for (int k = 1; k < q; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    std::vector<double> nodes = jacobi_eigenvalues(std::move(off));

    // P_q(x) and P_q'(x) by recurrence.
    auto legendre = [q](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 1; k < q; ++k) {
            const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
            p0 = p1;
            p1 = p2;
        }
        const double dp = q * (x * p1 - p0) / (x * x - 1.0);
        return std::pair{p1, dp};
    };
    auto step = [&](double x) {
        const auto [p, dp] = legendre(x);
        return p / dp;
    };
    for (auto& x : nodes) x = polish(x, step, "Gauss-Legendre", q);
    symmetrize(nodes);

    QuadratureRule rule;
    rule.order = q;
    rule.kind = RuleKind::gauss_legendre;
    rule.nodes = nodes;
    rule.weights.resize(q);
    for (int i = 0; i < q; ++i) {
        const double x = nodes[i];
        const double dp = legendre(x).second;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    rule.scaled_weights = rule.weights;
    return rule;
}

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double half_width,
                                     double tol, int max_doublings) {
    if (!(half_width > 0.0)) {
        throw DomainError("integration half_width must be positive");
    }
    if (!(tol > 0.0)) {
        throw DomainError("integration tolerance must be positive");
    }
    constexpr int kInitialIntervals = 64;
    constexpr int kMinDoublings = 3;

    IntegrationResult result;
    long intervals = kInitialIntervals;
    double h = 2.0 * half_width / intervals;
    double sum = 0.5 * (f(-half_width) + f(half_width));
    for (long i = 1; i < intervals; ++i) sum += f(-half_width + i * h);
    result.evaluations = intervals + 1;
    double estimate = h * sum;

    for (int doubling = 1; doubling <= max_doublings; ++doubling) {
        double midpoints = 0.0;
        for (long i = 0; i < intervals; ++i) midpoints += f(-half_width + (i + 0.5) * h);
        result.evaluations += intervals;
        sum += midpoints;
        intervals *= 2;
        h *= 0.5;
        const double refined = h * sum;
        result.error_estimate = std::abs(refined - estimate);
        estimate = refined;
        if (doubling >= kMinDoublings && result.error_estimate < tol) {
            result.converged = true;
            break;
        }
    }
    result.value = estimate;
    return result;
}

}  // namespace paultrap
