#include "paultrap/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "paultrap/errors.hpp"

#ifndef PAULTRAP_VERSION
#define PAULTRAP_VERSION "0.0.0"
#endif

namespace paultrap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string canonical(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string config_hash(const SweepSpec& spec) {
    std::string text = "m=" + canonical(spec.base.mass) + ";a=" + canonical(spec.base.lattice_period) +
                       ";hbar=" + canonical(spec.base.hbar) + ";omega=";
    for (double w : spec.omega_values) text += canonical(w) + ",";
    text += ";kappa=";
    for (double k : spec.kappa_values) text += canonical(k) + ",";
    text += ";n=";
    for (int n : spec.n_values) text += std::to_string(n) + ",";
    text += ";methods=";
    for (Method m : spec.methods) text += to_string(m) + ",";
    text += ";outputs=";
    for (Output o : spec.outputs) text += to_string(o) + ",";
    text += ";tol=" + canonical(spec.quadrature.tolerance) + ";doublings=" + std::to_string(spec.quadrature.max_doublings);
    if (spec.density_grid) {
        text += ";grid=" + canonical(spec.density_grid->half_width) + "," +
                std::to_string(spec.density_grid->num_points);
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b) ||
           (std::isnan(a) && std::isnan(b));
}

void mask_outputs(const SweepSpec& spec, SweepRow& row) {
    MeasureSet& m = row.measures;
    if (!spec.wants(Output::fisher)) m.fisher_x = m.fisher_p = kNaN;
    if (!spec.wants(Output::entropy)) m.entropy_x = m.entropy_p = kNaN;
    if (!spec.wants(Output::moments)) m.x2_mean = m.p2_mean = m.uncertainty = kNaN;
    if (!spec.wants(Output::complexity)) m.power_x = m.power_p = m.complexity_x = m.complexity_p = kNaN;
    if (!spec.wants(Output::energy)) row.energy = kNaN;
}

// Re-checks the row's internal identities before it is emitted.
void check_invariants(const EffectiveOscillator& eff, SweepRow& row) {
    const MeasureSet& m = row.measures;
    const double level = 2.0 * row.n + 1.0;
    const double product = 4.0 * level * level;
    if (!std::isnan(m.fisher_x) && std::abs(m.fisher_product() - product) > 1e-6 * product) {
        row.flags.push_back("invariant:IxIp");
    }
    const double uncertainty = eff.hbar() * (row.n + 0.5);
    if (!std::isnan(m.uncertainty) && std::abs(m.uncertainty - uncertainty) > 1e-8 * uncertainty) {
        row.flags.push_back("invariant:dxdp");
    }
}

SweepRow evaluate(const SweepSpec& spec, double omega, double kappa, int n, Method method,
                  std::vector<ErratumFlag>& errata) {
    TrapConfig config = spec.base;
    config.trap_frequency = omega;
    config.lattice_shape = kappa;
    const EffectiveOscillator eff(config);

    SweepRow row;
    row.omega = omega;
    row.kappa = kappa;
    row.n = n;
    row.method = method;
    row.measures = compute_measures(eff, n, method, spec.quadrature);
    row.energy = energy_level(eff, n);
    if (!row.measures.converged) row.flags.push_back("unconverged");
    check_invariants(eff, row);

    // Published values are in natural units only.
    const bool natural_units = spec.base.mass == 1.0 && spec.base.hbar == 1.0;
    if (method == Method::closed_form && natural_units) {
        for (auto& flag : compare_with_published(n, omega, kappa, row.measures)) {
            const bool shown = (flag.column.starts_with("I") && spec.wants(Output::fisher)) ||
                               (!flag.column.starts_with("I") && spec.wants(Output::moments));
            if (!shown) continue;
            row.flags.push_back("erratum:" + flag.column + ":published=" + format_g9(flag.published) +
                                ":computed=" + format_g9(flag.computed));
            errata.push_back(std::move(flag));
        }
    }
    mask_outputs(spec, row);
    return row;
}

DensityProfile profile(const SweepSpec& spec, double omega, double kappa, int n) {
    TrapConfig config = spec.base;
    config.trap_frequency = omega;
    config.lattice_shape = kappa;
    const Eigenstate state(EffectiveOscillator(config), n);
    const DensityGrid& grid = *spec.density_grid;
    DensityProfile out{omega, kappa, n, {}, {}, {}};
    const double step = 2.0 * grid.half_width / (grid.num_points - 1);
    for (int i = 0; i < grid.num_points; ++i) {
        const double c = -grid.half_width + i * step;
        out.coordinates.push_back(c);
        out.position_density.push_back(position_density(state, c));
        out.momentum_density.push_back(momentum_density(state, c));
    }
    return out;
}

template <class Task>
void parallel_for(std::size_t count, Task&& task) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) task(i);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

void SweepSpec::validate() const {
    if (omega_values.empty() || kappa_values.empty() || n_values.empty()) {
        throw DomainError("sweep needs non-empty omega, kappa and n lists");
    }
    if (methods.empty()) throw DomainError("sweep needs at least one method");
    for (double w : omega_values) {
        TrapConfig c = base;
        c.trap_frequency = w;
        c.validate();
    }
    for (double k : kappa_values) {
        TrapConfig c = base;
        c.lattice_shape = k;
        c.validate();
    }
    for (int n : n_values) {
        if (n < 0) throw DomainError("quantum number n must be non-negative, got " + std::to_string(n));
        if (n > kMaxQuadratureOrder &&
            std::find(methods.begin(), methods.end(), Method::quadrature) != methods.end()) {
            throw DomainError("quadrature method supports n <= 30, got " + std::to_string(n));
        }
    }
    const bool profiles = wants(Output::density_profiles);
    if (profiles != density_grid.has_value()) {
        throw DomainError("density_grid is required exactly when density-profiles are requested");
    }
    if (density_grid && (density_grid->num_points < 2 || !(density_grid->half_width > 0.0))) {
        throw DomainError("density_grid needs half_width > 0 and at least 2 points");
    }
    if (!(quadrature.tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
}

bool SweepSpec::wants(Output output) const {
    return std::find(outputs.begin(), outputs.end(), output) != outputs.end();
}

bool SweepResult::has_unconverged() const {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.measures.converged; });
}

bool SweepResult::identical_to(const SweepResult& other) const {
    if (rows.size() != other.rows.size() || !(provenance == other.provenance) ||
        errata_flags != other.errata_flags || density_profiles.size() != other.density_profiles.size()) {
        return false;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& a = rows[i];
        const SweepRow& b = other.rows[i];
        if (!same_bits(a.omega, b.omega) || !same_bits(a.kappa, b.kappa) || a.n != b.n ||
            a.method != b.method || !a.measures.identical_to(b.measures) ||
            !same_bits(a.energy, b.energy) || a.flags != b.flags) {
            return false;
        }
    }
    for (std::size_t i = 0; i < density_profiles.size(); ++i) {
        const auto& a = density_profiles[i];
        const auto& b = other.density_profiles[i];
        if (a.n != b.n || !same_bits(a.omega, b.omega) || !same_bits(a.kappa, b.kappa) ||
            a.coordinates != b.coordinates || a.position_density != b.position_density ||
            a.momentum_density != b.momentum_density) {
            return false;
        }
    }
    return true;
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    std::vector<Method> methods = spec.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    struct Point {
        double omega;
        double kappa;
        int n;
        Method method;
    };
    std::vector<Point> points;
    for (double w : spec.omega_values)
        for (double k : spec.kappa_values)
            for (int n : spec.n_values)
                for (Method m : methods) points.push_back({w, k, n, m});

    std::vector<SweepRow> rows(points.size());
    std::vector<std::vector<ErratumFlag>> errata(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const Point& p = points[i];
        rows[i] = evaluate(spec, p.omega, p.kappa, p.n, p.method, errata[i]);
    });

    SweepResult result;
    result.rows = std::move(rows);
    for (auto& flags : errata) {
        result.errata_flags.insert(result.errata_flags.end(), flags.begin(), flags.end());
    }
    result.provenance.version = tool_version();
    result.provenance.config_hash = config_hash(spec);
    for (Method m : methods) result.provenance.methods.push_back(to_string(m));

    if (spec.wants(Output::density_profiles)) {
        for (double w : spec.omega_values)
            for (double k : spec.kappa_values)
                for (int n : spec.n_values) result.density_profiles.push_back(profile(spec, w, k, n));
    }
    return result;
}

SweepSpec table1_spec(Table1Block block) {
    SweepSpec spec;
    if (block == Table1Block::kappa_sweep) {
        spec.omega_values = {1.0};
        spec.kappa_values = {0.2, 0.4, 0.8};
    } else {
        spec.omega_values = {1.0, 2.0, 3.0};
        spec.kappa_values = {0.5};
    }
    spec.n_values = {0, 1, 2, 3};
    spec.methods = {Method::closed_form};
    spec.outputs = {Output::fisher, Output::moments};
    return spec;
}

std::string tool_version() { return PAULTRAP_VERSION; }

std::string to_string(Method method) {
    return method == Method::closed_form ? "closed-form" : "quadrature";
}

Method method_from_string(const std::string& text) {
    if (text == "closed-form" || text == "closed") return Method::closed_form;
    if (text == "quadrature") return Method::quadrature;
    throw DomainError("unknown method '" + text + "'");
}

std::string to_string(Output output) {
    switch (output) {
        case Output::fisher: return "fisher";
        case Output::entropy: return "entropy";
        case Output::moments: return "moments";
        case Output::complexity: return "complexity";
        case Output::energy: return "energy";
        case Output::density_profiles: return "density-profiles";
    }
    return "unknown";
}

Output output_from_string(const std::string& text) {
    for (Output o : {Output::fisher, Output::entropy, Output::moments, Output::complexity,
                     Output::energy, Output::density_profiles}) {
        if (to_string(o) == text) return o;
    }
    throw DomainError("unknown output '" + text + "'");
}

}  // namespace paultrap
