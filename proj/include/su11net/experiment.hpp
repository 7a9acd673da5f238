#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "su11net/config.hpp"
#include "su11net/metrology.hpp"

namespace su11net::experiment {

struct RunResult {
  std::vector<metrology::SensitivityReport> rows;  // ascending in r
  bool any_flagged = false;
};

// Runs one saturation report per sweep value.  Rows may execute in parallel;
// the output order and content depend only on the config.  A failure inside
// one row (truncation overflow, degenerate slope, invalid point) flags that
// row and leaves its numeric fields NaN; the other rows are unaffected.
RunResult run_experiment(const config::ExperimentConfig& cfg);

// CSV with the fixed column order
// scheme,M,r,beta,eval_point,signal,signal_std,slope,delta_measured,
// qfi_closed,qfi_numeric,qcrb,saturation_ratio,flags
// and floats at 9 significant digits.  An absent qfi_numeric prints empty;
// flags are joined with ';'.
std::string to_csv(const std::vector<metrology::SensitivityReport>& rows);

// JSON array mirroring the CSV fields; non-finite values become null.
std::string to_json(const std::vector<metrology::SensitivityReport>& rows);

// Relative paths land in $SU11NET_OUT_DIR when that is set, else in the
// working directory; absolute paths are used as given.
std::filesystem::path resolve_output_path(const std::string& path);

// Throws std::runtime_error naming the path when it cannot be written.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace su11net::experiment
