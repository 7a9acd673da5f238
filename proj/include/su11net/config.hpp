#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su11net/circuit.hpp"

namespace su11net::config {

// Declarative experiment description, parsed from a small key = value text
// format with [section] headers.  Example:
//
//   scheme = network-displacement
//   modes = 4
//   r = 1.0
//   encoding = uniform 0.1
//   backend = gaussian
//
//   [output]
//   path = run.csv
//   format = csv
//
// A [sweep] section with start/stop/steps replaces the single r value.
// Encodings come in exactly one of three forms: an explicit array
// "[0.1, -0.1]", "uniform <v>", or "alternating <v>" (+v, -v, +v, ...).

struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;
};

enum class EncodingForm { kDefault, kExplicit, kUniform, kAlternating };

struct EncodingSpec {
  EncodingForm form = EncodingForm::kDefault;
  std::vector<double> values;  // kExplicit
  double value = 0.0;          // kUniform / kAlternating
};

enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  circuit::Scheme scheme = circuit::Scheme::kSingleDisplacement;
  int modes = 1;
  std::optional<double> r;
  std::optional<SweepSpec> sweep;
  std::optional<double> beta;
  circuit::DistributorKind distributor = circuit::DistributorKind::kDft;
  EncodingSpec encoding;
  std::optional<double> alpha_seed;
  circuit::Backend backend = circuit::Backend::gaussian();
  std::optional<double> eval_point;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::kCsv;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;
  std::vector<std::string> errors;  // all problems found, with line numbers

  bool ok() const { return config.has_value() && errors.empty(); }
};

// Parses and validates; on any problem, `errors` lists every issue found
// rather than stopping at the first.
ParseResult parse_config(std::string_view text);

// Parses one encoding value ("[0.1, -0.1]", "uniform 0.1",
// "alternating 1e-3"); on failure returns nullopt and sets `error`.
std::optional<EncodingSpec> parse_encoding_text(std::string_view text,
                                                std::string* error);

// Canonical text form; parse_config(to_text(c)) reproduces c.
std::string to_text(const ExperimentConfig& c);

// The r values the experiment runs over, in ascending order.
std::vector<double> sweep_values(const ExperimentConfig& c);

// Concrete per-mode encoding vector for one run.
std::vector<double> resolve_encoding(const ExperimentConfig& c,
                                     double eval_point);

// Evaluation point for the sensitivity estimate: the explicit setting if
// given, else the mean of an explicit encoding, else the scheme default.
double resolve_eval_point(const ExperimentConfig& c);

}  // namespace su11net::config
