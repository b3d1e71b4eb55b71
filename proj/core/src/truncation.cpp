#include "paultrap/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "paultrap/errors.hpp"

namespace paultrap {

SymmetricTridiagonal GridHamiltonian::matrix() const {
    return SymmetricTridiagonal(diagonal, std::vector<double>(num_points - 1, off_diagonal));
}

double default_half_width(const TrapConfig& config) {
    const EffectiveOscillator eff(config);
    return std::max(10.0 * eff.osc_length(), 1.5 * config.lattice_period);
}

GridHamiltonian discretize(const TrapConfig& config, PotentialKind kind, double x_half_width,
                           int num_points) {
    const EffectiveOscillator eff(config);
    if (num_points < kMinGridPoints || num_points % 2 == 0) {
        throw DomainError("num_points must be odd and >= 101, got " + std::to_string(num_points));
    }
    if (!(x_half_width >= kMinWindowLengths * eff.osc_length() * (1.0 - 1e-12))) {
        throw DomainError("x_half_width must be at least 8 oscillator lengths (" +
                          std::to_string(kMinWindowLengths * eff.osc_length()) + "), got " +
                          std::to_string(x_half_width));
    }
    GridHamiltonian h;
    h.config = config;
    h.x_min = -x_half_width;
    h.x_max = x_half_width;
    h.num_points = num_points;
    h.potential_kind = kind;

    const double dx = h.spacing();
    const double kinetic = config.hbar * config.hbar / (config.mass * dx * dx);
    h.off_diagonal = -0.5 * kinetic;
    h.diagonal.resize(num_points);
    const int center = num_points / 2;
    for (int i = 0; i <= center; ++i) {
        // Evaluate at |x| and mirror so the potential is exactly even.
        const double x = (center - i) * dx;
        const double v = kind == PotentialKind::full ? full_potential(config, x)
                                                     : truncated_potential(eff, x);
        h.diagonal[i] = kinetic + v;
        h.diagonal[num_points - 1 - i] = kinetic + v;
    }
    return h;
}

bool GridEigenpairs::all_converged() const {
    return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

namespace {

void fix_sign(std::vector<double>& v) {
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    const double floor = 1e-3 * peak;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > floor && a >= std::abs(v[i - 1]) && a >= std::abs(v[i + 1])) {
            if (v[i] < 0.0) {
                for (double& x : v) x = -x;
            }
            return;
        }
    }
}

}  // namespace

GridEigenpairs lowest_eigenpairs(const GridHamiltonian& h, int k) {
    if (k < 1 || k > kMaxEigenpairs || k >= h.num_points) {
        throw DomainError("eigenpair count must be in [1, 20], got " + std::to_string(k));
    }
    const SymmetricTridiagonal matrix = h.matrix();
    GridEigenpairs out;
    out.spacing = h.spacing();
    out.energies = matrix.lowest_eigenvalues(k);
    const double scale = 1.0 / std::sqrt(out.spacing);
    std::vector<std::vector<double>> unit_vectors;
    for (int level = 0; level < k; ++level) {
        auto result = matrix.eigenvector(out.energies[level], unit_vectors);
        unit_vectors.push_back(result.vector);
        std::vector<double> psi = std::move(result.vector);
        for (double& x : psi) x *= scale;
        fix_sign(psi);
        out.wavefunctions.push_back(std::move(psi));
        out.converged.push_back(result.converged);
    }
    return out;
}

namespace {

struct LevelSet {
    std::vector<double> levels;
    std::vector<double> raw_levels;
    std::vector<double> ground;
    double spacing = 0.0;
    bool extrapolated = false;
    bool converged = true;
};

LevelSet solve_levels(const TrapConfig& config, PotentialKind kind, double half_width, int k,
                      const ValidationOptions& options) {
    const GridHamiltonian fine = discretize(config, kind, half_width, options.num_points);
    const GridEigenpairs pairs = lowest_eigenpairs(fine, k);
    LevelSet out;
    out.raw_levels = pairs.energies;
    out.levels = pairs.energies;
    out.ground = pairs.wavefunctions.front();
    out.spacing = pairs.spacing;
    out.converged = pairs.all_converged();

    const int coarse_points = (options.num_points + 1) / 2;
    if (options.richardson && coarse_points % 2 == 1 && coarse_points >= kMinGridPoints) {
        const GridHamiltonian coarse = discretize(config, kind, half_width, coarse_points);
        const std::vector<double> coarse_levels = coarse.matrix().lowest_eigenvalues(k);
        for (int i = 0; i < k; ++i) {
            out.levels[i] = (4.0 * pairs.energies[i] - coarse_levels[i]) / 3.0;
        }
        out.extrapolated = true;
    }
    return out;
}

}  // namespace

SpectrumComparison validate_truncation(const TrapConfig& config, int k,
                                       const ValidationOptions& options) {
    const EffectiveOscillator eff(config);
    const double half_width = options.half_width > 0.0 ? options.half_width : default_half_width(config);

    const LevelSet truncated = solve_levels(config, PotentialKind::truncated, half_width, k, options);
    const LevelSet full = solve_levels(config, PotentialKind::full, half_width, k, options);

    SpectrumComparison out;
    out.half_width = half_width;
    out.num_points = options.num_points;
    out.regime_ratio = eff.regime_ratio();
    out.extrapolated = truncated.extrapolated && full.extrapolated;
    out.converged = truncated.converged && full.converged;
    out.truncated_levels = truncated.levels;
    out.numeric_levels = full.levels;
    out.truncated_raw_levels = truncated.raw_levels;
    out.numeric_raw_levels = full.raw_levels;
    const double quantum = eff.hbar() * eff.omega_eff();
    for (int n = 0; n < k; ++n) {
        const double analytic = energy_level(eff, n);
        out.analytic_levels.push_back(analytic);
        out.level_errors.push_back(std::abs(full.levels[n] - truncated.levels[n]) / quantum);
        out.truncated_level_errors.push_back(std::abs(truncated.levels[n] - analytic) / std::abs(analytic));
    }
    double l2 = 0.0;
    for (std::size_t i = 0; i < full.ground.size(); ++i) {
        const double diff = full.ground[i] * full.ground[i] - truncated.ground[i] * truncated.ground[i];
        l2 += diff * diff;
    }
    out.ground_density_l2_error = std::sqrt(l2 * truncated.spacing);
    return out;
}

}  // namespace paultrap
