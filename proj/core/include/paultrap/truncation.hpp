#pragma once

#include <vector>

#include "paultrap/oscillator.hpp"
#include "paultrap/tridiagonal.hpp"

namespace paultrap {

enum class PotentialKind { full, truncated };

/// Three-point finite-difference discretization of
///   -(hbar^2 / 2m) d^2/dx^2 + V(x)
/// on num_points equally spaced nodes x_i = x_min + i dx spanning
/// [x_min, x_max], with the wavefunction taken to vanish outside.
struct GridHamiltonian {
    TrapConfig config;
    double x_min = 0.0;
    double x_max = 0.0;
    int num_points = 0;
    PotentialKind potential_kind = PotentialKind::truncated;
    std::vector<double> diagonal;
    double off_diagonal = 0.0;  ///< -hbar^2 / (2 m dx^2)

    double spacing() const { return (x_max - x_min) / (num_points - 1); }
    double grid_point(int i) const { return x_min + i * spacing(); }
    SymmetricTridiagonal matrix() const;
};

inline constexpr int kMinGridPoints = 101;
inline constexpr double kMinWindowLengths = 8.0;

/// Throws DomainError for even or too few points, or a window narrower
/// than 8 oscillator lengths.
GridHamiltonian discretize(const TrapConfig& config, PotentialKind kind, double x_half_width,
                           int num_points);

/// Default Dirichlet half-width: max(10 osc lengths, 1.5 lattice periods).
double default_half_width(const TrapConfig& config);

struct GridEigenpairs {
    std::vector<double> energies;
    /// Grid wavefunctions, normalized so that sum psi_i^2 dx = 1, with the
    /// first significant lobe from the left taken positive.
    std::vector<std::vector<double>> wavefunctions;
    std::vector<bool> converged;
    double spacing = 0.0;

    bool all_converged() const;
};

inline constexpr int kMaxEigenpairs = 20;

/// k lowest eigenpairs (k <= 20) by Sturm bisection and inverse iteration.
GridEigenpairs lowest_eigenpairs(const GridHamiltonian& h, int k);

struct ValidationOptions {
    int num_points = 4001;
    /// <= 0 selects default_half_width.
    double half_width = 0.0;
    /// Combine the grid with its every-other-point subgrid,
    /// E = (4 E_fine - E_coarse) / 3, cancelling the dx^2 error term.
    /// Needs num_points = 1 (mod 4); otherwise raw levels are reported.
    bool richardson = true;
};

struct SpectrumComparison {
    std::vector<double> analytic_levels;          ///< closed-form E_n of the truncated model
    std::vector<double> truncated_levels;         ///< numeric, truncated potential
    std::vector<double> numeric_levels;           ///< numeric, full potential
    std::vector<double> truncated_raw_levels;     ///< finest grid, no extrapolation
    std::vector<double> numeric_raw_levels;
    std::vector<double> level_errors;             ///< |E_full - E_trunc| / (hbar omega_eff)
    std::vector<double> truncated_level_errors;   ///< |E_trunc - E_analytic| / |E_analytic|
    double ground_density_l2_error = 0.0;         ///< || rho_full - rho_trunc ||_2 on the grid
    double regime_ratio = 0.0;                    ///< osc_length / lattice_period
    double half_width = 0.0;
    int num_points = 0;
    bool extrapolated = false;
    bool converged = true;
};

SpectrumComparison validate_truncation(const TrapConfig& config, int k,
                                       const ValidationOptions& options = {});

}  // namespace paultrap
