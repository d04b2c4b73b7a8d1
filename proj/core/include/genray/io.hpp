#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "genray/experiment.hpp"
#include "genray/types.hpp"

namespace genray {

/// Thrown on unreadable/unwritable paths and malformed result files.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads amplitude data: one ASCII decimal value per line, '#' comment lines
// and blank lines skipped. Throws std::invalid_argument (with the line
// number) on non-numeric lines, std::domain_error on values <= 0 or an empty
// file, io_error if the file cannot be opened.
std::vector<double> load_amplitude_file(const std::filesystem::path& path);

// CSV of cell results, header
//   alpha,sigma,n,bias_alpha,rmse_alpha,bias_sigma,rmse_sigma,trials_completed
// followed by the auxiliary paper_mse_alpha,paper_mse_sigma,flagged columns.
// Numeric fields are printed with 17 significant digits so a re-parse
// recovers every double exactly.
void write_results_csv(const std::vector<CellResult>& cells, const std::filesystem::path& path);

std::vector<CellResult> read_results_csv(const std::filesystem::path& path);

// Line chart of rmse_alpha against n, one polyline per (alpha, sigma) pair.
void write_rmse_svg(const std::vector<CellResult>& cells, const std::filesystem::path& path);

// CSV plus optional SVG, as one call.
void emit_results(const std::vector<CellResult>& cells, const std::filesystem::path& csv_path,
                  const std::optional<std::filesystem::path>& svg_path = std::nullopt);

}  // namespace genray
