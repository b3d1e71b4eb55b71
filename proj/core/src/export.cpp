#include "paultrap/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "paultrap/errors.hpp"

namespace paultrap {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string g9(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& f : flags) out += (out.empty() ? "" : ";") + f;
    return out;
}

std::vector<std::string> split_flags(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find(';', start);
        out.push_back(text.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

json number(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

double number_from(const json& j) { return j.is_null() ? kNaN : j.get<double>(); }

struct Column {
    const char* key;
    double MeasureSet::*field;
};

constexpr Column kMeasureColumns[] = {
    {"I_x", &MeasureSet::fisher_x},   {"I_p", &MeasureSet::fisher_p},
    {"x2", &MeasureSet::x2_mean},     {"p2", &MeasureSet::p2_mean},
    {"dxdp", &MeasureSet::uncertainty}, {"S_x", &MeasureSet::entropy_x},
    {"S_p", &MeasureSet::entropy_p},  {"J_x", &MeasureSet::power_x},
    {"J_p", &MeasureSet::power_p},    {"P_x", &MeasureSet::complexity_x},
    {"P_p", &MeasureSet::complexity_p},
};

double product_or_nan(const MeasureSet& m) {
    return std::isnan(m.fisher_x) || std::isnan(m.fisher_p) ? kNaN : m.fisher_product();
}

}  // namespace

std::string to_csv(const SweepResult& result) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const SweepRow& r : result.rows) {
        const MeasureSet& m = r.measures;
        const double cells[] = {m.fisher_x,   m.fisher_p,  product_or_nan(m), m.x2_mean,
                                m.p2_mean,    m.uncertainty, m.entropy_x,     m.entropy_p,
                                m.power_x,    m.power_p,   m.complexity_x,    m.complexity_p,
                                r.energy};
        out += g9(r.omega) + ',' + g9(r.kappa) + ',' + std::to_string(r.n) + ',' + to_string(r.method);
        for (double c : cells) out += ',' + g9(c);
        out += ',' + join_flags(r.flags) + '\n';
    }
    return out;
}

std::string to_json(const SweepResult& result) {
    json doc;
    doc["provenance"] = {{"tool", result.provenance.tool},
                         {"version", result.provenance.version},
                         {"config_hash", result.provenance.config_hash},
                         {"methods", result.provenance.methods}};
    json rows = json::array();
    for (const SweepRow& r : result.rows) {
        json row;
        row["omega"] = r.omega;
        row["kappa"] = r.kappa;
        row["n"] = r.n;
        row["method"] = to_string(r.method);
        for (const auto& c : kMeasureColumns) row[c.key] = number(r.measures.*c.field);
        row["IxIp"] = number(product_or_nan(r.measures));
        row["E_n"] = number(r.energy);
        row["flags"] = join_flags(r.flags);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    json errata = json::array();
    for (const ErratumFlag& e : result.errata_flags) {
        errata.push_back({{"block", to_string(e.block)},
                          {"n", e.n},
                          {"omega", e.omega},
                          {"kappa", e.kappa},
                          {"column", e.column},
                          {"published", e.published},
                          {"computed", e.computed},
                          {"justification", e.justification}});
    }
    doc["errata"] = std::move(errata);
    if (!result.density_profiles.empty()) {
        json profiles = json::array();
        for (const auto& p : result.density_profiles) {
            profiles.push_back({{"omega", p.omega},
                                {"kappa", p.kappa},
                                {"n", p.n},
                                {"coordinates", p.coordinates},
                                {"rho_x", p.position_density},
                                {"rho_p", p.momentum_density}});
        }
        doc["density_profiles"] = std::move(profiles);
    }
    return doc.dump(2) + '\n';
}

SweepResult sweep_result_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        SweepResult result;
        const json& prov = doc.at("provenance");
        result.provenance.tool = prov.at("tool").get<std::string>();
        result.provenance.version = prov.at("version").get<std::string>();
        result.provenance.config_hash = prov.at("config_hash").get<std::string>();
        result.provenance.methods = prov.at("methods").get<std::vector<std::string>>();
        for (const json& row : doc.at("rows")) {
            SweepRow r;
            r.omega = row.at("omega").get<double>();
            r.kappa = row.at("kappa").get<double>();
            r.n = row.at("n").get<int>();
            r.method = method_from_string(row.at("method").get<std::string>());
            r.measures.method = r.method;
            for (const auto& c : kMeasureColumns) r.measures.*c.field = number_from(row.at(c.key));
            r.energy = number_from(row.at("E_n"));
            r.flags = split_flags(row.at("flags").get<std::string>());
            r.measures.converged =
                std::find(r.flags.begin(), r.flags.end(), "unconverged") == r.flags.end();
            result.rows.push_back(std::move(r));
        }
        for (const json& e : doc.at("errata")) {
            ErratumFlag flag;
            flag.block = e.at("block").get<std::string>() == "kappa-sweep" ? Table1Block::kappa_sweep
                                                                          : Table1Block::omega_sweep;
            flag.n = e.at("n").get<int>();
            flag.omega = e.at("omega").get<double>();
            flag.kappa = e.at("kappa").get<double>();
            flag.column = e.at("column").get<std::string>();
            flag.published = e.at("published").get<double>();
            flag.computed = e.at("computed").get<double>();
            flag.justification = e.at("justification").get<std::string>();
            result.errata_flags.push_back(std::move(flag));
        }
        if (doc.contains("density_profiles")) {
            for (const json& p : doc.at("density_profiles")) {
                DensityProfile profile;
                profile.omega = p.at("omega").get<double>();
                profile.kappa = p.at("kappa").get<double>();
                profile.n = p.at("n").get<int>();
                profile.coordinates = p.at("coordinates").get<std::vector<double>>();
                profile.position_density = p.at("rho_x").get<std::vector<double>>();
                profile.momentum_density = p.at("rho_p").get<std::vector<double>>();
                result.density_profiles.push_back(std::move(profile));
            }
        }
        return result;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed sweep JSON: ") + e.what());
    }
}

std::string density_profiles_to_csv(const SweepResult& result) {
    std::string out = "omega,kappa,n,coordinate,rho_x,rho_p\n";
    for (const auto& p : result.density_profiles) {
        for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
            out += g9(p.omega) + ',' + g9(p.kappa) + ',' + std::to_string(p.n) + ',' +
                   g9(p.coordinates[i]) + ',' + g9(p.position_density[i]) + ',' +
                   g9(p.momentum_density[i]) + '\n';
        }
    }
    return out;
}

std::string figure_to_csv(const FigureData& figure) {
    std::string out = "# " + figure.id + '\n';
    for (const auto& note : figure.notes) out += "# " + note + '\n';
    for (std::size_t i = 0; i < figure.columns.size(); ++i) {
        out += (i ? "," : "") + figure.columns[i];
    }
    out += '\n';
    for (const auto& row : figure.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + g9(row[i]);
        out += '\n';
    }
    return out;
}

std::string figure_to_json(const FigureData& figure) {
    json doc;
    doc["id"] = figure.id;
    doc["notes"] = figure.notes;
    doc["columns"] = figure.columns;
    json rows = json::array();
    for (const auto& row : figure.rows) {
        json r = json::array();
        for (double v : row) r.push_back(number(v));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + '\n';
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace paultrap
