#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "paultrap/figures.hpp"
#include "paultrap/sweep.hpp"

namespace paultrap {

/// Raised when an export cannot be written; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCsvHeader =
    "omega,kappa,n,method,I_x,I_p,IxIp,x2,p2,dxdp,S_x,S_p,J_x,J_p,P_x,P_p,E_n,flags";

/// One header line plus one line per row; 9 significant digits, '\n' endings,
/// unavailable values as empty cells, flags joined with ';'.
std::string to_csv(const SweepResult& result);

/// Rows with the CSV keys (full binary64 precision, null for unavailable),
/// plus provenance, errata and any density profiles.
std::string to_json(const SweepResult& result);

/// Inverse of to_json. Throws DomainError on malformed input.
SweepResult sweep_result_from_json(std::string_view text);

/// Long-format CSV: omega,kappa,n,coordinate,rho_x,rho_p.
std::string density_profiles_to_csv(const SweepResult& result);

/// `# note` lines, then a header and the data rows.
std::string figure_to_csv(const FigureData& figure);
std::string figure_to_json(const FigureData& figure);

/// Writes bytes verbatim; throws IoError naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace paultrap
