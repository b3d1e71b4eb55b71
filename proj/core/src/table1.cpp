#include "paultrap/table1.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace paultrap {

namespace {

using B = Table1Block;

// Transcribed as printed, including the cells that disagree with their own rows.
constexpr std::array<PublishedRow, 24> kPublished{{
    {B::kappa_sweep, 0, 1.0, 0.2, 1.78885, 2.23607, 4.0, 0.559017, 3.91312, 0.5},
    {B::kappa_sweep, 0, 1.0, 0.4, 1.54919, 2.58199, 4.0, 0.645497, 4.51848, 0.5},
    {B::kappa_sweep, 0, 1.0, 0.8, 0.894427, 4.47214, 4.0, 1.11803, 7.82624, 0.5},
    {B::kappa_sweep, 1, 1.0, 0.2, 5.36656, 6.7082, 36.0, 1.67705, 1.34164, 1.5},
    {B::kappa_sweep, 1, 1.0, 0.4, 4.64758, 7.74597, 36.0, 1.93649, 1.1619, 1.5},
    {B::kappa_sweep, 1, 1.0, 0.8, 2.68328, 13.4164, 36.0, 3.3541, 0.67082, 1.5},
    {B::kappa_sweep, 2, 1.0, 0.2, 8.94427, 11.1803, 100.0, 2.79508, 2.23607, 2.5},
    {B::kappa_sweep, 2, 1.0, 0.4, 7.74597, 12.9099, 100.0, 3.22749, 1.93649, 2.5},
    {B::kappa_sweep, 2, 1.0, 0.8, 4.47214, 22.3607, 100.0, 5.59017, 1.11803, 2.5},
    {B::kappa_sweep, 3, 1.0, 0.2, 8.94427, 15.6525, 196.0, 3.91312, 3.1305, 3.5},
    {B::kappa_sweep, 3, 1.0, 0.4, 7.74597, 18.0739, 196.0, 4.51848, 2.71109, 3.5},
    {B::kappa_sweep, 3, 1.0, 0.8, 4.47214, 31.305, 196.0, 7.82624, 1.56525, 3.5},
    {B::omega_sweep, 0, 1.0, 0.5, 1.41421, 2.82843, 4.0, 0.707107, 0.353553, 0.5},
    {B::omega_sweep, 0, 2.0, 0.5, 2.82843, 1.41421, 4.0, 0.353553, 0.707107, 0.5},
    {B::omega_sweep, 0, 3.0, 0.5, 4.24264, 0.942809, 4.0, 0.235702, 1.06066, 0.5},
    {B::omega_sweep, 1, 1.0, 0.5, 4.24264, 8.48528, 36.0, 2.12132, 1.06066, 1.5},
    {B::omega_sweep, 1, 2.0, 0.5, 8.48528, 4.24264, 36.0, 1.06066, 2.12132, 1.5},
    {B::omega_sweep, 1, 3.0, 0.5, 12.7279, 2.82843, 36.0, 0.707107, 3.18198, 1.5},
    {B::omega_sweep, 2, 1.0, 0.5, 7.07107, 14.1421, 100.0, 3.53553, 1.76777, 2.5},
    {B::omega_sweep, 2, 2.0, 0.5, 14.1421, 7.07107, 100.0, 1.76777, 3.53553, 2.5},
    {B::omega_sweep, 2, 3.0, 0.5, 21.2132, 4.71405, 100.0, 1.17851, 5.3033, 2.5},
    {B::omega_sweep, 3, 1.0, 0.5, 9.89949, 19.799, 196.0, 4.94975, 2.47487, 3.5},
    {B::omega_sweep, 3, 2.0, 0.5, 19.799, 9.89949, 196.0, 2.47487, 4.94975, 3.5},
    {B::omega_sweep, 3, 3.0, 0.5, 29.6985, 6.59966, 196.0, 1.64992, 7.42462, 3.5},
}};

std::string format_g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string justify(const PublishedRow& row, const std::string& column) {
    if (column == "p2" || column == "x2") {
        const double implied = std::sqrt(row.x2_mean * row.p2_mean);
        return "published sqrt(x2*p2) = " + format_g6(implied) + " but published dxdp = " +
               format_g6(row.uncertainty);
    }
    if (column == "I_x" || column == "I_p") {
        const double implied = row.fisher_x * row.fisher_p;
        return "published I_x*I_p = " + format_g6(implied) + " but published IxIp = " +
               format_g6(row.fisher_product);
    }
    return "disagrees with the closed form";
}

}  // namespace

std::span<const PublishedRow> published_table1() { return kPublished; }

std::optional<PublishedRow> find_published(int n, double omega, double kappa) {
    for (const auto& row : kPublished) {
        if (row.n == n && row.omega == omega && row.kappa == kappa) return row;
    }
    return std::nullopt;
}

bool agrees_to_significant_figures(double computed, double published, int digits) {
    if (published == 0.0) return computed == 0.0;
    const int exponent = static_cast<int>(std::floor(std::log10(std::abs(published))));
    const double half_unit = 0.5 * std::pow(10.0, exponent - (digits - 1));
    return std::abs(computed - published) <= half_unit * (1.0 + 1e-9);
}

std::vector<ErratumFlag> compare_with_published(int n, double omega, double kappa,
                                                const MeasureSet& m) {
    std::vector<ErratumFlag> flags;
    const auto row = find_published(n, omega, kappa);
    if (!row) return flags;
    const std::array<std::pair<const char*, std::pair<double, double>>, 6> cells{{
        {"I_x", {m.fisher_x, row->fisher_x}},
        {"I_p", {m.fisher_p, row->fisher_p}},
        {"IxIp", {m.fisher_product(), row->fisher_product}},
        {"x2", {m.x2_mean, row->x2_mean}},
        {"p2", {m.p2_mean, row->p2_mean}},
        {"dxdp", {m.uncertainty, row->uncertainty}},
    }};
    for (const auto& [column, values] : cells) {
        const auto [computed, published] = values;
        if (!agrees_to_significant_figures(computed, published)) {
            flags.push_back({row->block, n, omega, kappa, column, published, computed,
                             justify(*row, column)});
        }
    }
    return flags;
}

Table1Report reproduce_table1() {
    Table1Report report;
    for (const auto& row : kPublished) {
        TrapConfig config;
        config.trap_frequency = row.omega;
        config.lattice_shape = row.kappa;
        const MeasureSet m = closed_form_measures(EffectiveOscillator(config), row.n);
        auto flags = compare_with_published(row.n, row.omega, row.kappa, m);
        report.cells_checked += 6;
        report.cells_matched += 6 - static_cast<int>(flags.size());
        report.errata.insert(report.errata.end(), flags.begin(), flags.end());
    }
    return report;
}

std::string to_string(Table1Block block) {
    return block == Table1Block::kappa_sweep ? "kappa-sweep" : "omega-sweep";
}

}  // namespace paultrap
