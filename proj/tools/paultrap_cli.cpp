// paultrap: command-line front end for the trap/lattice information measures.
//
// Exit status: 0 success, 1 domain or usage error, 2 unconverged numerics
// (output is still written, with rows flagged).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "paultrap/eigenstate.hpp"
#include "paultrap/errors.hpp"
#include "paultrap/export.hpp"
#include "paultrap/figures.hpp"
#include "paultrap/measures.hpp"
#include "paultrap/oscillator.hpp"
#include "paultrap/sweep.hpp"
#include "paultrap/table1.hpp"
#include "paultrap/truncation.hpp"

namespace pt = paultrap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUnconverged = 2;

constexpr double kHbarSi = 1.054571817e-34;

struct Globals {
    std::string units = "natural";
    std::string method = "closed";
    std::string out;
    std::string format = "csv";
    double tol = 1e-12;
    int max_doublings = 22;
    std::optional<double> mass;
    std::optional<double> period;
};

struct PointArgs {
    double omega = 1.0;
    double kappa = 0.0;
};

pt::TrapConfig base_config(const Globals& g) {
    pt::TrapConfig c;
    if (g.units == "si") {
        if (!g.mass || !g.period) throw pt::DomainError("--units si requires --mass (kg) and --period (m)");
        c.hbar = kHbarSi;
    }
    if (g.mass) c.mass = *g.mass;
    if (g.period) c.lattice_period = *g.period;
    return c;
}

pt::TrapConfig point_config(const Globals& g, const PointArgs& p) {
    pt::TrapConfig c = base_config(g);
    c.trap_frequency = p.omega;
    c.lattice_shape = p.kappa;
    c.validate();
    return c;
}

std::vector<pt::Method> methods(const Globals& g) {
    if (g.method == "both") return {pt::Method::closed_form, pt::Method::quadrature};
    return {pt::method_from_string(g.method)};
}

pt::QuadratureOptions quadrature(const Globals& g) {
    if (!(g.tol > 0.0)) throw pt::DomainError("--tol must be positive");
    if (g.max_doublings < 3) throw pt::DomainError("--max-doublings must be >= 3");
    pt::QuadratureOptions q;
    q.tolerance = g.tol;
    q.max_doublings = g.max_doublings;
    return q;
}

bool json_output(const Globals& g) { return g.format == "json"; }

void emit(const Globals& g, const std::string& bytes) {
    if (g.out.empty() || g.out == "-") {
        std::cout << bytes;
        std::cout.flush();
    } else {
        pt::write_file(g.out, bytes);
    }
}

std::string g9(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

nlohmann::json number(double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); }

void add_point_options(CLI::App* cmd, PointArgs& p) {
    cmd->add_option("--omega", p.omega, "trap frequency")->capture_default_str();
    cmd->add_option("--kappa", p.kappa, "lattice shape parameter, 0 <= kappa < 1")->capture_default_str();
}

// Subcommands -----------------------------------------------------------------

int run_spectrum(const Globals& g, const PointArgs& p, int levels) {
    if (levels < 1) throw pt::DomainError("--levels must be >= 1");
    const pt::EffectiveOscillator eff(point_config(g, p));
    if (json_output(g)) {
        nlohmann::json doc{{"omega", p.omega},
                           {"kappa", p.kappa},
                           {"omega_eff", eff.omega_eff()},
                           {"lambda", eff.offset_lambda()},
                           {"osc_length", eff.osc_length()},
                           {"regime_ratio", eff.regime_ratio()}};
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n < levels; ++n) rows.push_back({{"n", n}, {"E_n", pt::energy_level(eff, n)}});
        doc["levels"] = std::move(rows);
        emit(g, doc.dump(2) + "\n");
    } else {
        std::string out = "# omega_eff = " + g9(eff.omega_eff()) + ", lambda = " + g9(eff.offset_lambda()) +
                          ", osc_length/period = " + g9(eff.regime_ratio()) + "\nn,E_n\n";
        for (int n = 0; n < levels; ++n) out += std::to_string(n) + "," + g9(pt::energy_level(eff, n)) + "\n";
        emit(g, out);
    }
    return kExitOk;
}

int run_state(const Globals& g, const PointArgs& p, int n, int points, double half_width) {
    if (points < 2) throw pt::DomainError("--points must be >= 2");
    if (!(half_width > 0.0)) throw pt::DomainError("--half-width must be positive");
    const pt::Eigenstate s(pt::EffectiveOscillator(point_config(g, p)), n);
    pt::FigureData data;
    data.id = "state";
    data.columns = {"x", "psi", "rho_x", "p", "phi_envelope", "rho_p"};
    data.notes = {"n = " + std::to_string(n) + ", half-width = " + g9(half_width) + " oscillator lengths",
                  "phi(p) = (-i)^n * phi_envelope(p)"};
    const double xs = half_width * s.oscillator().osc_length();
    const double ps = half_width * s.oscillator().momentum_scale();
    for (int i = 0; i < points; ++i) {
        const double t = -1.0 + 2.0 * i / (points - 1);
        const double x = t * xs, q = t * ps;
        const double psi = s.position_amplitude(x).value, env = s.momentum_envelope(q).value;
        data.rows.push_back({x, psi, psi * psi, q, env, env * env});
    }
    emit(g, json_output(g) ? pt::figure_to_json(data) : pt::figure_to_csv(data));
    return kExitOk;
}

int finish_sweep(const Globals& g, const pt::SweepResult& result, const std::string& profiles_out) {
    if (json_output(g)) {
        emit(g, pt::to_json(result));
    } else {
        emit(g, pt::to_csv(result));
        if (!result.density_profiles.empty()) pt::write_file(profiles_out, pt::density_profiles_to_csv(result));
    }
    for (const auto& e : result.errata_flags) {
        std::cerr << "erratum: " << pt::to_string(e.block) << " n=" << e.n << " omega=" << g9(e.omega)
                  << " kappa=" << g9(e.kappa) << " " << e.column << " published " << g9(e.published)
                  << ", computed " << g9(e.computed) << " (" << e.justification << ")\n";
    }
    if (result.has_unconverged()) {
        std::cerr << "paultrap: unconverged quadrature in flagged rows\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

struct SweepArgs {
    std::vector<double> omega{1.0};
    std::vector<double> kappa{0.0};
    std::vector<int> n{0};
    std::vector<std::string> outputs;
    double density_half_width = 6.0;
    int density_points = 241;
    std::string profiles_out;
};

int run_sweep_cmd(const Globals& g, const SweepArgs& a) {
    pt::SweepSpec spec;
    spec.base = base_config(g);
    spec.omega_values = a.omega;
    spec.kappa_values = a.kappa;
    spec.n_values = a.n;
    spec.methods = methods(g);
    spec.quadrature = quadrature(g);
    spec.export_format = json_output(g) ? pt::ExportFormat::json : pt::ExportFormat::csv;
    if (!a.outputs.empty()) {
        spec.outputs.clear();
        for (const auto& o : a.outputs) spec.outputs.push_back(pt::output_from_string(o));
    }
    if (spec.wants(pt::Output::density_profiles)) {
        spec.density_grid = pt::DensityGrid{a.density_half_width, a.density_points};
        if (!json_output(g) && a.profiles_out.empty()) {
            throw pt::DomainError("density-profiles with --format csv requires --profiles-out");
        }
    }
    return finish_sweep(g, pt::run_sweep(spec), a.profiles_out);
}

int run_measures(const Globals& g, const PointArgs& p, const std::vector<int>& n) {
    SweepArgs a;
    a.omega = {p.omega};
    a.kappa = {p.kappa};
    a.n = n;
    return run_sweep_cmd(g, a);
}

int run_table1(const Globals& g, const std::string& block) {
    if (g.units != "natural") throw pt::DomainError("table1 is defined in natural units only");
    std::vector<pt::Table1Block> blocks;
    if (block == "kappa" || block == "both") blocks.push_back(pt::Table1Block::kappa_sweep);
    if (block == "omega" || block == "both") blocks.push_back(pt::Table1Block::omega_sweep);
    pt::SweepResult merged;
    for (pt::Table1Block b : blocks) {
        pt::SweepSpec spec = pt::table1_spec(b);
        spec.methods = methods(g);
        spec.quadrature = quadrature(g);
        pt::SweepResult r = pt::run_sweep(spec);
        merged.provenance = r.provenance;
        merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
        merged.errata_flags.insert(merged.errata_flags.end(), r.errata_flags.begin(), r.errata_flags.end());
    }
    return finish_sweep(g, merged, "");
}

struct FigureArgs {
    std::string id;
    std::vector<double> omega;
    std::vector<double> kappa;
    int points = 401;
    int n_max = 10;
    double omega_min = 0.5, omega_max = 3.0, kappa_min = 0.0, kappa_max = 0.9;
    int omega_steps = 11, kappa_steps = 10;
};

int run_figure(const Globals& g, const FigureArgs& a) {
    if (g.method == "both") throw pt::DomainError("figure takes a single --method");
    pt::FigureParams params;
    params.base = base_config(g);
    params.omega_values = a.omega;
    params.kappa_values = a.kappa;
    params.num_points = a.points;
    params.n_max = a.n_max;
    params.omega_min = a.omega_min;
    params.omega_max = a.omega_max;
    params.omega_steps = a.omega_steps;
    params.kappa_min = a.kappa_min;
    params.kappa_max = a.kappa_max;
    params.kappa_steps = a.kappa_steps;
    params.method = methods(g).front();
    params.quadrature = quadrature(g);
    const pt::FigureData data = pt::emit_figure_data(a.id, params);
    emit(g, json_output(g) ? pt::figure_to_json(data) : pt::figure_to_csv(data));
    return kExitOk;
}

struct ValidateArgs {
    int levels = 4;
    int points = 4001;
    double half_width = 0.0;
    bool raw = false;
};

int run_validate(const Globals& g, const PointArgs& p, const ValidateArgs& a) {
    pt::ValidationOptions options;
    options.num_points = a.points;
    options.half_width = a.half_width;
    options.richardson = !a.raw;
    const pt::SpectrumComparison v = pt::validate_truncation(point_config(g, p), a.levels, options);
    if (json_output(g)) {
        nlohmann::json doc{{"omega", p.omega},
                           {"kappa", p.kappa},
                           {"regime_ratio", v.regime_ratio},
                           {"half_width", v.half_width},
                           {"num_points", v.num_points},
                           {"extrapolated", v.extrapolated},
                           {"converged", v.converged},
                           {"ground_density_l2_error", v.ground_density_l2_error}};
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 0; n < v.analytic_levels.size(); ++n) {
            rows.push_back({{"n", n},
                            {"E_analytic", v.analytic_levels[n]},
                            {"E_truncated", v.truncated_levels[n]},
                            {"E_full", v.numeric_levels[n]},
                            {"E_truncated_raw", v.truncated_raw_levels[n]},
                            {"E_full_raw", v.numeric_raw_levels[n]},
                            {"discrepancy", number(v.level_errors[n])},
                            {"truncated_error", number(v.truncated_level_errors[n])}});
        }
        doc["levels"] = std::move(rows);
        emit(g, doc.dump(2) + "\n");
    } else {
        std::string out = "# osc_length/period = " + g9(v.regime_ratio) + ", half-width = " + g9(v.half_width) +
                          ", points = " + std::to_string(v.num_points) +
                          (v.extrapolated ? ", Richardson-extrapolated" : ", raw grid") + "\n" +
                          "# ground density L2 error = " + g9(v.ground_density_l2_error) + "\n" +
                          "n,E_analytic,E_truncated,E_full,E_truncated_raw,E_full_raw,discrepancy,truncated_error\n";
        for (std::size_t n = 0; n < v.analytic_levels.size(); ++n) {
            out += std::to_string(n) + "," + g9(v.analytic_levels[n]) + "," + g9(v.truncated_levels[n]) + "," +
                   g9(v.numeric_levels[n]) + "," + g9(v.truncated_raw_levels[n]) + "," +
                   g9(v.numeric_raw_levels[n]) + "," + g9(v.level_errors[n]) + "," +
                   g9(v.truncated_level_errors[n]) + "\n";
        }
        emit(g, out);
    }
    if (!v.converged) {
        std::cerr << "paultrap: eigenvector iteration did not converge\n";
        return kExitUnconverged;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information measures of a charged particle in a Paul trap with an optical lattice"};
    app.set_version_flag("--version", pt::tool_version());
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--units", g.units, "unit system")->check(CLI::IsMember({"natural", "si"}))->capture_default_str();
    app.add_option("--method", g.method, "evaluation method")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--tol", g.tol, "quadrature tolerance")->capture_default_str();
    app.add_option("--max-doublings", g.max_doublings, "trapezoid doubling budget")->capture_default_str();
    app.add_option("--mass", g.mass, "particle mass (required with --units si)");
    app.add_option("--period", g.period, "lattice period a (required with --units si)");

    PointArgs point;
    int levels = 10;
    auto* spectrum = app.add_subcommand("spectrum", "energy levels of the effective oscillator");
    add_point_options(spectrum, point);
    spectrum->add_option("--levels", levels, "number of levels")->capture_default_str();

    int state_n = 0, state_points = 241;
    double state_half_width = 6.0;
    auto* state = app.add_subcommand("state", "position and momentum amplitudes of one eigenstate");
    add_point_options(state, point);
    state->add_option("--n", state_n, "quantum number")->capture_default_str();
    state->add_option("--points", state_points, "samples per space")->capture_default_str();
    state->add_option("--half-width", state_half_width, "window in oscillator lengths")->capture_default_str();

    std::vector<int> measure_n{0};
    auto* measures = app.add_subcommand("measures", "information measures at one (omega, kappa)");
    add_point_options(measures, point);
    measures->add_option("--n", measure_n, "quantum numbers (comma separated)")->delimiter(',');

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "dense grid over omega, kappa and n");
    sweep->add_option("--omega", sweep_args.omega, "trap frequencies (comma separated)")->delimiter(',');
    sweep->add_option("--kappa", sweep_args.kappa, "lattice shapes (comma separated)")->delimiter(',');
    sweep->add_option("--n", sweep_args.n, "quantum numbers (comma separated)")->delimiter(',');
    sweep->add_option("--outputs", sweep_args.outputs,
                      "fisher,entropy,moments,complexity,energy,density-profiles")
        ->delimiter(',');
    sweep->add_option("--density-half-width", sweep_args.density_half_width, "profile window")->capture_default_str();
    sweep->add_option("--density-points", sweep_args.density_points, "profile samples")->capture_default_str();
    sweep->add_option("--profiles-out", sweep_args.profiles_out, "density profile CSV path");

    std::string block = "both";
    auto* table1 = app.add_subcommand("table1", "regenerate the reference table and flag inconsistent cells");
    table1->add_option("--block", block, "kappa, omega or both")
        ->check(CLI::IsMember({"kappa", "omega", "both"}))
        ->capture_default_str();

    FigureArgs fig;
    auto* figure = app.add_subcommand("figure", "plot-ready data for one figure");
    figure->add_option("id", fig.id, "fig2, fig3, fig4a, fig4b, fig5a, fig5b, fig6, fig7 or fig8")->required();
    figure->add_option("--omega", fig.omega, "override omega values")->delimiter(',');
    figure->add_option("--kappa", fig.kappa, "override kappa values")->delimiter(',');
    figure->add_option("--points", fig.points, "samples per curve")->capture_default_str();
    figure->add_option("--n-max", fig.n_max, "highest level for fig3")->capture_default_str();
    figure->add_option("--omega-min", fig.omega_min, "surface range (tool-chosen default)")->capture_default_str();
    figure->add_option("--omega-max", fig.omega_max)->capture_default_str();
    figure->add_option("--omega-steps", fig.omega_steps)->capture_default_str();
    figure->add_option("--kappa-min", fig.kappa_min, "surface range (tool-chosen default)")->capture_default_str();
    figure->add_option("--kappa-max", fig.kappa_max)->capture_default_str();
    figure->add_option("--kappa-steps", fig.kappa_steps)->capture_default_str();

    ValidateArgs val;
    auto* validate = app.add_subcommand("validate-truncation", "finite-difference check of the truncated model");
    add_point_options(validate, point);
    validate->add_option("--levels", val.levels, "eigenpairs to compare (<= 20)")->capture_default_str();
    validate->add_option("--points", val.points, "odd grid size")->capture_default_str();
    validate->add_option("--half-width", val.half_width, "grid half-width in length units (0 = automatic)");
    validate->add_flag("--raw", val.raw, "report the finest grid without Richardson extrapolation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (*spectrum) return run_spectrum(g, point, levels);
        if (*state) return run_state(g, point, state_n, state_points, state_half_width);
        if (*measures) return run_measures(g, point, measure_n);
        if (*sweep) return run_sweep_cmd(g, sweep_args);
        if (*table1) return run_table1(g, block);
        if (*figure) return run_figure(g, fig);
        if (*validate) return run_validate(g, point, val);
    } catch (const pt::DomainError& e) {
        std::cerr << "paultrap: " << e.what() << "\n";
        return kExitDomain;
    } catch (const pt::IoError& e) {
        std::cerr << "paultrap: " << e.what() << "\n";
        return kExitDomain;
    } catch (const pt::ConvergenceError& e) {
        std::cerr << "paultrap: " << e.what() << "\n";
        return kExitUnconverged;
    }
    return kExitDomain;
}
