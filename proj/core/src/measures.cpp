#include "paultrap/measures.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "paultrap/errors.hpp"
#include "paultrap/quadrature.hpp"

namespace paultrap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kLegendrePanelOrder = 20;
constexpr double kPanelWidthLengths = 0.1;

void require_quadrature_order(const Eigenstate& state) {
    if (state.n() > kMaxQuadratureOrder) {
        throw DomainError("quadrature measures support n <= 30, got " + std::to_string(state.n()));
    }
}

struct Sample {
    double coordinate;
    double value;
    double derivative;
};

/// Integrates F(sample) over one representation of the state.
class DensityIntegrator {
public:
    DensityIntegrator(const Eigenstate& state, Space space, const QuadratureOptions& options)
        : state_(state), space_(space), options_(options), beta_(state.beta(space)) {}

    double beta() const { return beta_; }

    template <class F>
    IntegrationResult integrate(QuadratureScheme scheme, double scale, F&& integrand) const {
        auto at = [&](double c) {
            const HermiteFunctionValue a = state_.amplitude(space_, c);
            return integrand(Sample{c, a.value, a.derivative});
        };
        if (scheme == QuadratureScheme::trapezoid) {
            return adaptive_integrate(at, state_.window_half_width(space_),
                                      options_.tolerance * scale, options_.max_doublings);
        }
        const QuadratureRule& rule = gauss_rule();
        const double root_beta = std::sqrt(beta_);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.scaled_weights[i] * at(rule.nodes[i] / root_beta);
        }
        IntegrationResult out;
        out.value = sum / root_beta;
        out.converged = true;
        out.evaluations = static_cast<long>(rule.nodes.size());
        return out;
    }

    /// Composite Gauss-Legendre between the nodes of psi_n, for integrands
    /// that are only C^1 there.
    template <class F>
    IntegrationResult integrate_split(F&& integrand) const {
        const double root_beta = std::sqrt(beta_);
        const double half_width = state_.window_half_width(space_);
        std::vector<double> breaks{-half_width};
        if (state_.n() > 0) {
            for (double y : gauss_hermite_rule(state_.n()).nodes) breaks.push_back(y / root_beta);
        }
        breaks.push_back(half_width);

        const QuadratureRule panel = gauss_legendre_rule(kLegendrePanelOrder);
        const double target_width = kPanelWidthLengths / root_beta;
        IntegrationResult out;
        out.converged = true;
        double sum = 0.0;
        for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
            const double lo = breaks[b];
            const double hi = breaks[b + 1];
            const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / target_width)));
            const double width = (hi - lo) / panels;
            for (int k = 0; k < panels; ++k) {
                const double center = lo + (k + 0.5) * width;
                double panel_sum = 0.0;
                for (int i = 0; i < panel.order; ++i) {
                    const double c = center + 0.5 * width * panel.nodes[i];
                    const HermiteFunctionValue a = state_.amplitude(space_, c);
                    panel_sum += panel.weights[i] * integrand(Sample{c, a.value, a.derivative});
                }
                sum += 0.5 * width * panel_sum;
                out.evaluations += panel.order;
            }
        }
        out.value = sum;
        return out;
    }

private:
    const QuadratureRule& gauss_rule() const {
        if (rule_.order == 0) {
            rule_ = gauss_hermite_rule(state_.n() + 2 + options_.extra_gauss_order);
        }
        return rule_;
    }

    const Eigenstate& state_;
    Space space_;
    QuadratureOptions options_;
    double beta_;
    mutable QuadratureRule rule_;
};

double neg_rho_log_rho(const Sample& s) {
    const double rho = s.value * s.value;
    // 0 ln 0 = 0 at nodes and in underflowed tails.
    return rho > 0.0 ? -rho * std::log(rho) : 0.0;
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b) ||
           (std::isnan(a) && std::isnan(b));
}

}  // namespace

bool MeasureSet::identical_to(const MeasureSet& o) const noexcept {
    return same_bits(fisher_x, o.fisher_x) && same_bits(fisher_p, o.fisher_p) &&
           same_bits(entropy_x, o.entropy_x) && same_bits(entropy_p, o.entropy_p) &&
           same_bits(x2_mean, o.x2_mean) && same_bits(p2_mean, o.p2_mean) &&
           same_bits(uncertainty, o.uncertainty) && same_bits(power_x, o.power_x) &&
           same_bits(power_p, o.power_p) && same_bits(complexity_x, o.complexity_x) &&
           same_bits(complexity_p, o.complexity_p) && method == o.method &&
           converged == o.converged;
}

FisherInformation fisher_closed(const EffectiveOscillator& eff, int n) {
    if (n < 0) throw DomainError("quantum number n must be non-negative, got " + std::to_string(n));
    const double level = 2.0 * n + 1.0;
    const double m = eff.mass();
    const double w = eff.omega_eff();
    const double hbar = eff.hbar();
    return {2.0 * m * w / hbar * level, 2.0 / (m * hbar * w) * level, true};
}

Moments moments_closed(const EffectiveOscillator& eff, int n) {
    if (n < 0) throw DomainError("quantum number n must be non-negative, got " + std::to_string(n));
    const double level = 2.0 * n + 1.0;
    const double m = eff.mass();
    const double w = eff.omega_eff();
    const double hbar = eff.hbar();
    Moments out;
    out.x2_mean = hbar / (2.0 * m * w) * level;
    out.p2_mean = m * hbar * w / 2.0 * level;
    out.uncertainty = hbar * (n + 0.5);
    return out;
}

ShannonEntropy shannon_closed_ground(const EffectiveOscillator& eff) {
    const double m = eff.mass();
    const double w = eff.omega_eff();
    const double hbar = eff.hbar();
    constexpr double pi = std::numbers::pi;
    return {0.5 * (1.0 + std::log(pi * hbar / (m * w))), 0.5 * (1.0 + std::log(pi * m * hbar * w)),
            true};
}

FisherInformation fisher_numeric(const Eigenstate& state, QuadratureScheme scheme,
                                 const QuadratureOptions& options) {
    require_quadrature_order(state);
    auto fisher = [&](Space space) {
        const DensityIntegrator integrator(state, space, options);
        return integrator.integrate(scheme, integrator.beta(),
                                    [](const Sample& s) { return 4.0 * s.derivative * s.derivative; });
    };
    const IntegrationResult x = fisher(Space::position);
    const IntegrationResult p = fisher(Space::momentum);
    return {x.value, p.value, x.converged && p.converged};
}

Moments moments_numeric(const Eigenstate& state, QuadratureScheme scheme,
                        const QuadratureOptions& options) {
    require_quadrature_order(state);
    auto first_second = [&](Space space) {
        const DensityIntegrator integrator(state, space, options);
        const double width = 1.0 / std::sqrt(integrator.beta());
        const IntegrationResult first = integrator.integrate(
            scheme, width, [](const Sample& s) { return s.coordinate * s.value * s.value; });
        const IntegrationResult second = integrator.integrate(
            scheme, width * width,
            [](const Sample& s) { return s.coordinate * s.coordinate * s.value * s.value; });
        return std::pair{first, second};
    };
    const auto [x1, x2] = first_second(Space::position);
    const auto [p1, p2] = first_second(Space::momentum);

    Moments out;
    out.x_mean = x1.value;
    out.p_mean = p1.value;
    out.x2_mean = x2.value;
    out.p2_mean = p2.value;
    const double var_x = x2.value - x1.value * x1.value;
    const double var_p = p2.value - p1.value * p1.value;
    out.uncertainty = std::sqrt(var_x * var_p);
    out.converged = x1.converged && x2.converged && p1.converged && p2.converged;
    return out;
}

ShannonEntropy shannon_numeric(const Eigenstate& state, QuadratureScheme scheme,
                               const QuadratureOptions& options) {
    require_quadrature_order(state);
    auto entropy = [&](Space space) {
        const DensityIntegrator integrator(state, space, options);
        if (scheme == QuadratureScheme::gauss_hermite) {
            return integrator.integrate_split(neg_rho_log_rho);
        }
        return integrator.integrate(scheme, 1.0, neg_rho_log_rho);
    };
    const IntegrationResult x = entropy(Space::position);
    const IntegrationResult p = entropy(Space::momentum);
    return {x.value, p.value, x.converged && p.converged};
}

Normalization normalization_numeric(const Eigenstate& state, QuadratureScheme scheme,
                                    const QuadratureOptions& options) {
    require_quadrature_order(state);
    auto norm = [&](Space space) {
        const DensityIntegrator integrator(state, space, options);
        return integrator.integrate(scheme, 1.0, [](const Sample& s) { return s.value * s.value; });
    };
    const IntegrationResult x = norm(Space::position);
    const IntegrationResult p = norm(Space::momentum);
    return {x.value, p.value, x.converged && p.converged};
}

FisherShannon fisher_shannon(const MeasureSet& m) {
    if (std::isnan(m.entropy_x) || std::isnan(m.entropy_p) || std::isnan(m.fisher_x) ||
        std::isnan(m.fisher_p)) {
        throw DomainError("Fisher-Shannon complexity needs both entropies and Fisher informations");
    }
    constexpr double norm = 1.0 / (2.0 * std::numbers::pi * std::numbers::e);
    FisherShannon out;
    out.power_x = norm * std::exp(2.0 * m.entropy_x);
    out.power_p = norm * std::exp(2.0 * m.entropy_p);
    out.complexity_x = out.power_x * m.fisher_x;
    out.complexity_p = out.power_p * m.fisher_p;
    return out;
}

namespace {

void attach_complexity(MeasureSet& m) {
    if (std::isnan(m.entropy_x) || std::isnan(m.entropy_p)) {
        m.power_x = m.power_p = m.complexity_x = m.complexity_p = kNaN;
        return;
    }
    const FisherShannon fs = fisher_shannon(m);
    m.power_x = fs.power_x;
    m.power_p = fs.power_p;
    m.complexity_x = fs.complexity_x;
    m.complexity_p = fs.complexity_p;
}

}  // namespace

MeasureSet closed_form_measures(const EffectiveOscillator& eff, int n) {
    const FisherInformation fisher = fisher_closed(eff, n);
    const Moments moments = moments_closed(eff, n);
    MeasureSet m;
    m.method = Method::closed_form;
    m.fisher_x = fisher.position;
    m.fisher_p = fisher.momentum;
    m.x2_mean = moments.x2_mean;
    m.p2_mean = moments.p2_mean;
    m.uncertainty = moments.uncertainty;
    if (n == 0) {
        const ShannonEntropy s = shannon_closed_ground(eff);
        m.entropy_x = s.position;
        m.entropy_p = s.momentum;
    } else {
        // Excited-state entropies have no closed form.
        m.entropy_x = m.entropy_p = kNaN;
    }
    attach_complexity(m);
    return m;
}

MeasureSet quadrature_measures(const Eigenstate& state, const QuadratureOptions& options) {
    const FisherInformation fisher = fisher_numeric(state, options.fisher_scheme, options);
    const Moments moments = moments_numeric(state, options.moment_scheme, options);
    const ShannonEntropy entropy = shannon_numeric(state, options.entropy_scheme, options);
    MeasureSet m;
    m.method = Method::quadrature;
    m.fisher_x = fisher.position;
    m.fisher_p = fisher.momentum;
    m.x2_mean = moments.x2_mean;
    m.p2_mean = moments.p2_mean;
    m.uncertainty = moments.uncertainty;
    m.entropy_x = entropy.position;
    m.entropy_p = entropy.momentum;
    m.converged = fisher.converged && moments.converged && entropy.converged;
    attach_complexity(m);
    return m;
}

MeasureSet compute_measures(const EffectiveOscillator& eff, int n, Method method,
                            const QuadratureOptions& options) {
    if (method == Method::closed_form) {
        return closed_form_measures(eff, n);
    }
    return quadrature_measures(Eigenstate(eff, n), options);
}

}  // namespace paultrap
