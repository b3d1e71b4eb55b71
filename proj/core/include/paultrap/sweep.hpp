#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paultrap/measures.hpp"
#include "paultrap/oscillator.hpp"
#include "paultrap/table1.hpp"

namespace paultrap {

enum class Output { fisher, entropy, moments, complexity, energy, density_profiles };
enum class ExportFormat { csv, json };

struct DensityGrid {
    double half_width = 6.0;  ///< same numeric value used for the x and p windows
    int num_points = 241;
};

/// Grid over (omega, kappa, n) and the methods and outputs to evaluate.
/// `base` supplies mass, lattice period and hbar; its omega and kappa are
/// overridden per grid point.
struct SweepSpec {
    std::vector<double> omega_values;
    std::vector<double> kappa_values;
    std::vector<int> n_values;
    std::vector<Method> methods{Method::closed_form};
    std::vector<Output> outputs{Output::fisher, Output::entropy, Output::moments,
                                Output::complexity, Output::energy};
    ExportFormat export_format = ExportFormat::csv;
    std::optional<DensityGrid> density_grid;
    TrapConfig base;
    QuadratureOptions quadrature;

    /// Throws DomainError on empty lists, out-of-domain values, or a
    /// density_grid that is present without density-profiles (or vice versa).
    void validate() const;
    bool wants(Output output) const;
};

struct SweepRow {
    double omega = 0.0;
    double kappa = 0.0;
    int n = 0;
    Method method = Method::closed_form;
    MeasureSet measures;
    double energy = 0.0;
    /// "unconverged", "invariant:<column>", or "erratum:<column>:published=..:computed=..".
    std::vector<std::string> flags;
};

struct DensityProfile {
    double omega = 0.0;
    double kappa = 0.0;
    int n = 0;
    std::vector<double> coordinates;  ///< shared x and p sample values
    std::vector<double> position_density;
    std::vector<double> momentum_density;
};

struct Provenance {
    std::string tool = "paultrap";
    std::string version;
    std::string config_hash;  ///< FNV-1a 64 of the canonical spec, hex
    std::vector<std::string> methods;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    Provenance provenance;
    std::vector<ErratumFlag> errata_flags;
    std::vector<DensityProfile> density_profiles;

    bool has_unconverged() const;
    /// Field-wise equality with bitwise comparison of doubles.
    bool identical_to(const SweepResult& other) const;
};

/// Evaluates every grid point (in parallel) and emits rows in
/// omega-major, kappa, n, method order. Unconverged quadrature marks the row.
SweepResult run_sweep(const SweepSpec& spec);

/// Sweeps that regenerate the two blocks of the published reference table.
SweepSpec table1_spec(Table1Block block);

std::string tool_version();
std::string to_string(Method method);
Method method_from_string(const std::string& text);
std::string to_string(Output output);
Output output_from_string(const std::string& text);

}  // namespace paultrap
