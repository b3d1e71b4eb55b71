#include "paultrap/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "paultrap/eigenstate.hpp"
#include "paultrap/errors.hpp"

namespace paultrap {

namespace {

TrapConfig with(const TrapConfig& base, double omega, double kappa) {
    TrapConfig c = base;
    c.trap_frequency = omega;
    c.lattice_shape = kappa;
    c.validate();
    return c;
}

std::string label(const char* name, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%.6g", name, v);
    return buf;
}

std::vector<double> or_default(const std::vector<double>& given, std::vector<double> fallback) {
    return given.empty() ? fallback : given;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw DomainError("grid needs at least one point");
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return out;
}

FigureData wavefunction_ladder(const FigureParams& p) {
    // Defaults: m = a = 1, kappa = 0.2, omega = 2.
    const double omega = or_default(p.omega_values, {2.0}).front();
    const double kappa = or_default(p.kappa_values, {0.2}).front();
    const EffectiveOscillator eff(with(p.base, omega, kappa));
    FigureData fig;
    fig.id = "fig2";
    fig.columns = {"x", "V2"};
    for (int n = 0; n < 4; ++n) fig.columns.push_back("psi" + std::to_string(n) + "_plus_E" + std::to_string(n));
    const double half_width = 6.0 * eff.osc_length();
    for (double x : linspace(-half_width, half_width, p.num_points)) {
        std::vector<double> row{x, truncated_potential(eff, x)};
        for (int n = 0; n < 4; ++n) {
            row.push_back(Eigenstate(eff, n).position_amplitude(x).value + energy_level(eff, n));
        }
        fig.rows.push_back(std::move(row));
    }
    for (int n = 0; n < 4; ++n) fig.notes.push_back(label(("E" + std::to_string(n) + " = ").c_str(), energy_level(eff, n)));
    fig.notes.push_back(label("omega = ", omega) + ", " + label("kappa = ", kappa));
    return fig;
}

FigureData spectrum(const FigureParams& p) {
    // Reference line: omega = 1, kappa = 0, lambda = 0. Tool-chosen series:
    // omega sweep at kappa = 0 and kappa sweep at omega = 1.
    FigureData fig;
    fig.id = "fig3";
    fig.columns = {"omega", "kappa", "lambda", "n", "E_n", "E_ref"};
    std::vector<std::pair<double, double>> series;
    for (double w : or_default(p.omega_values, {1.5, 2.0, 2.5, 3.0})) series.emplace_back(w, 0.0);
    for (double k : or_default(p.kappa_values, {0.1, 0.3, 0.5, 0.7, 0.9})) series.emplace_back(1.0, k);
    for (const auto& [w, k] : series) {
        const EffectiveOscillator eff(with(p.base, w, k));
        for (int n = 0; n <= p.n_max; ++n) {
            fig.rows.push_back({w, k, eff.offset_lambda(), static_cast<double>(n), energy_level(eff, n),
                                p.base.hbar * (n + 0.5)});
        }
    }
    fig.notes.push_back("E_ref is the bare oscillator ladder hbar*(n+1/2) at omega=1, kappa=0, lambda=0");
    return fig;
}

FigureData ground_densities(std::string id, Space space, const std::vector<std::pair<double, double>>& configs,
                            const FigureParams& p) {
    FigureData fig;
    fig.id = std::move(id);
    fig.columns = {space == Space::position ? "x" : "p"};
    std::vector<Eigenstate> states;
    double widest = 0.0;
    for (const auto& [w, k] : configs) {
        states.emplace_back(EffectiveOscillator(with(p.base, w, k)), 0);
        fig.columns.push_back(space == Space::position ? label("rho_omega", w) + label("_kappa", k)
                                                       : label("phi_omega", w) + label("_kappa", k));
        const double width = space == Space::position ? states.back().oscillator().osc_length()
                                                      : states.back().oscillator().momentum_scale();
        widest = std::max(widest, width);
    }
    for (double c : linspace(-4.0 * widest, 4.0 * widest, p.num_points)) {
        std::vector<double> row{c};
        for (const auto& s : states) {
            row.push_back(space == Space::position ? position_density(s, c) : momentum_density(s, c));
        }
        fig.rows.push_back(std::move(row));
    }
    for (const auto& s : states) {
        const double peak = space == Space::position ? position_density(s, 0.0) : momentum_density(s, 0.0);
        fig.notes.push_back(label("peak omega=", s.oscillator().config().trap_frequency) +
                            label(" kappa=", s.oscillator().config().lattice_shape) + label(": ", peak));
    }
    return fig;
}

std::vector<std::pair<double, double>> kappa_family(const FigureParams& p) {
    std::vector<std::pair<double, double>> out;
    const double w = or_default(p.omega_values, {2.0}).front();
    for (double k : or_default(p.kappa_values, {0.1, 0.5, 0.7})) out.emplace_back(w, k);
    return out;
}

std::vector<std::pair<double, double>> omega_family(const FigureParams& p) {
    std::vector<std::pair<double, double>> out;
    const double k = or_default(p.kappa_values, {0.5}).front();
    for (double w : or_default(p.omega_values, {1.0, 2.0, 3.0})) out.emplace_back(w, k);
    return out;
}

FigureData surface(const std::string& id, const FigureParams& p) {
    FigureData fig;
    fig.id = id;
    if (id == "fig6") fig.columns = {"omega", "kappa", "omega_eff", "I_x", "I_p"};
    if (id == "fig7") fig.columns = {"omega", "kappa", "omega_eff", "S_x", "S_p"};
    if (id == "fig8") fig.columns = {"omega", "kappa", "omega_eff", "P_x", "P_p"};
    const auto omegas = or_default(p.omega_values, linspace(p.omega_min, p.omega_max, p.omega_steps));
    const auto kappas = or_default(p.kappa_values, linspace(p.kappa_min, p.kappa_max, p.kappa_steps));
    for (double w : omegas) {
        for (double k : kappas) {
            const EffectiveOscillator eff(with(p.base, w, k));
            const MeasureSet m = compute_measures(eff, 0, p.method, p.quadrature);
            std::pair<double, double> v;
            if (id == "fig6") v = {m.fisher_x, m.fisher_p};
            if (id == "fig7") v = {m.entropy_x, m.entropy_p};
            if (id == "fig8") v = {m.complexity_x, m.complexity_p};
            fig.rows.push_back({w, k, eff.omega_eff(), v.first, v.second});
        }
    }
    fig.notes.push_back("ground state; method = " + std::string(p.method == Method::closed_form ? "closed-form" : "quadrature"));
    if (p.omega_values.empty() || p.kappa_values.empty()) {
        fig.notes.push_back("omega/kappa ranges are tool-chosen defaults, not published values");
    }
    if (id == "fig8") {
        fig.notes.push_back(
            "discrepancy: the ground-state density is Gaussian, so P_x = P_p = 1 identically "
            "(equality case of the Fisher-Shannon bound); a surface that grows across the "
            "(omega, kappa) plane is not reproducible with consistent entropy and Fisher forms");
    }
    return fig;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig2", "fig3", "fig4a", "fig4b", "fig5a",
                                              "fig5b", "fig6", "fig7", "fig8"};
    return ids;
}

FigureData emit_figure_data(std::string_view figure_id, const FigureParams& params) {
    if (params.num_points < 2) throw DomainError("figure grids need at least 2 points");
    const std::string id(figure_id);
    if (id == "fig2") return wavefunction_ladder(params);
    if (id == "fig3") return spectrum(params);
    if (id == "fig4a") return ground_densities(id, Space::position, kappa_family(params), params);
    if (id == "fig4b") return ground_densities(id, Space::position, omega_family(params), params);
    if (id == "fig5a") return ground_densities(id, Space::momentum, kappa_family(params), params);
    if (id == "fig5b") return ground_densities(id, Space::momentum, omega_family(params), params);
    if (id == "fig6" || id == "fig7" || id == "fig8") return surface(id, params);
    std::string known;
    for (const auto& s : figure_ids()) known += (known.empty() ? "" : ", ") + s;
    throw DomainError("unknown figure id '" + id + "' (known: " + known + ")");
}

}  // namespace paultrap
