#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paultrap/measures.hpp"
#include "paultrap/oscillator.hpp"

namespace paultrap {

/// Plot-ready columnar data for one figure.
struct FigureData {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> notes;
};

/// Parameters for figure regeneration. Empty lists select the defaults
/// listed per figure in figure_ids().
struct FigureParams {
    TrapConfig base;  ///< mass, lattice period, hbar
    std::vector<double> omega_values;
    std::vector<double> kappa_values;
    int num_points = 401;
    int n_max = 10;  ///< fig3 levels 0..n_max
    // Surface figures (fig6, fig7, fig8): tool-chosen default ranges.
    double omega_min = 0.5;
    double omega_max = 3.0;
    int omega_steps = 11;
    double kappa_min = 0.0;
    double kappa_max = 0.9;
    int kappa_steps = 10;
    Method method = Method::closed_form;
    QuadratureOptions quadrature;
};

/// fig2, fig3, fig4a, fig4b, fig5a, fig5b, fig6, fig7, fig8.
const std::vector<std::string>& figure_ids();

/// Throws DomainError for an unknown id or invalid parameters.
FigureData emit_figure_data(std::string_view figure_id, const FigureParams& params = {});

}  // namespace paultrap
