#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paultrap/measures.hpp"

namespace paultrap {

enum class Table1Block { kappa_sweep, omega_sweep };

/// One printed row of the published reference table (m = hbar = 1).
struct PublishedRow {
    Table1Block block;
    int n;
    double omega;
    double kappa;
    double fisher_x;
    double fisher_p;
    double fisher_product;
    double x2_mean;
    double p2_mean;
    double uncertainty;
};

/// The 24 published rows, kappa block first, in printed order.
std::span<const PublishedRow> published_table1();

/// Row with exactly these (n, omega, kappa), if one was published.
std::optional<PublishedRow> find_published(int n, double omega, double kappa);

/// Published cell that disagrees with the computed closed form.
struct ErratumFlag {
    Table1Block block = Table1Block::kappa_sweep;
    int n = 0;
    double omega = 0.0;
    double kappa = 0.0;
    std::string column;  ///< CSV column name: I_x, I_p, IxIp, x2, p2, dxdp
    double published = 0.0;
    double computed = 0.0;
    /// Evidence from the published row itself that the cell is inconsistent.
    std::string justification;

    friend bool operator==(const ErratumFlag&, const ErratumFlag&) = default;
};

/// True when `computed` rounds to `published` at `digits` significant figures,
/// i.e. lies within half a unit in the last kept place of the published value.
bool agrees_to_significant_figures(double computed, double published, int digits = 5);

/// Compares a closed-form MeasureSet against the published row for the same
/// point; returns one flag per disagreeing cell (empty if no row exists).
std::vector<ErratumFlag> compare_with_published(int n, double omega, double kappa,
                                                const MeasureSet& closed_form);

struct Table1Report {
    int cells_checked = 0;
    int cells_matched = 0;
    std::vector<ErratumFlag> errata;
};

/// Recomputes every published cell from the closed forms.
Table1Report reproduce_table1();

std::string to_string(Table1Block block);

}  // namespace paultrap
