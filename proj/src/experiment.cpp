#include "su11net/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "su11net/errors.hpp"

namespace su11net::experiment {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Keeps exception text out of the CSV separators.
std::string sanitize(std::string s) {
  for (char& ch : s)
    if (ch == ',' || ch == ';' || ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

metrology::SensitivityReport failed_row(const config::ExperimentConfig& cfg,
                                        double r, double eval,
                                        std::string flag) {
  metrology::SensitivityReport rep;
  rep.scheme = circuit::scheme_id(cfg.scheme);
  rep.modes = cfg.modes;
  rep.r = r;
  rep.beta =
      cfg.beta.value_or(circuit::is_phase_scheme(cfg.scheme) ? 0.0 : M_PI);
  rep.eval_point = eval;
  rep.signal = rep.signal_std = rep.slope = rep.delta_measured = kNan;
  rep.qfi_closed = rep.qcrb = rep.saturation_ratio = kNan;
  rep.flags.push_back(std::move(flag));
  return rep;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%#.9g", v);
  return buf;
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

RunResult run_experiment(const config::ExperimentConfig& cfg) {
  const std::vector<double> rs = config::sweep_values(cfg);
  const double eval = config::resolve_eval_point(cfg);

  metrology::ReportOptions options;
  options.backend = cfg.backend;
  // The truncated backend exists to cross-check the closed forms, so asking
  // for it turns the numeric Fisher-information column on.
  options.numeric_qfi =
      cfg.backend.kind == circuit::Backend::Kind::kFock;
  options.eval_point = eval;
  options.beta = cfg.beta;
  options.distributor = cfg.distributor;
  if (cfg.encoding.form != config::EncodingForm::kDefault)
    options.encoding = config::resolve_encoding(cfg, eval);
  options.alpha_seed = cfg.alpha_seed.value_or(0.0);

  RunResult result;
  result.rows.resize(rs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < rs.size(); ++i) {
    try {
      result.rows[i] =
          metrology::saturation_report(cfg.scheme, cfg.modes, rs[i], options);
    } catch (const truncation_overflow& e) {
      result.rows[i] = failed_row(
          cfg, rs[i], eval, "truncation-overflow:" + short_number(e.weight()));
    } catch (const degenerate_slope&) {
      result.rows[i] = failed_row(cfg, rs[i], eval, "degenerate-slope");
    } catch (const std::exception& e) {
      result.rows[i] =
          failed_row(cfg, rs[i], eval, "invalid:" + sanitize(e.what()));
    }
  }
  for (const auto& row : result.rows)
    if (!row.flags.empty()) result.any_flagged = true;
  return result;
}

std::string to_csv(const std::vector<metrology::SensitivityReport>& rows) {
  if (rows.empty())
    throw std::invalid_argument("refusing to emit an empty table");
  std::ostringstream out;
  out << "scheme,M,r,beta,eval_point,signal,signal_std,slope,delta_measured,"
         "qfi_closed,qfi_numeric,qcrb,saturation_ratio,flags\n";
  for (const auto& row : rows) {
    out << row.scheme << ',' << row.modes << ',' << csv_number(row.r) << ','
        << csv_number(row.beta) << ',' << csv_number(row.eval_point) << ','
        << csv_number(row.signal) << ',' << csv_number(row.signal_std) << ','
        << csv_number(row.slope) << ',' << csv_number(row.delta_measured)
        << ',' << csv_number(row.qfi_closed) << ',';
    if (row.qfi_numeric) out << csv_number(*row.qfi_numeric);
    out << ',' << csv_number(row.qcrb) << ','
        << csv_number(row.saturation_ratio) << ',';
    for (std::size_t i = 0; i < row.flags.size(); ++i) {
      if (i) out << ';';
      out << row.flags[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<metrology::SensitivityReport>& rows) {
  if (rows.empty())
    throw std::invalid_argument("refusing to emit an empty table");
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["scheme"] = row.scheme;
    j["M"] = row.modes;
    j["r"] = json_number(row.r);
    j["beta"] = json_number(row.beta);
    j["eval_point"] = json_number(row.eval_point);
    j["signal"] = json_number(row.signal);
    j["signal_std"] = json_number(row.signal_std);
    j["slope"] = json_number(row.slope);
    j["delta_measured"] = json_number(row.delta_measured);
    j["qfi_closed"] = json_number(row.qfi_closed);
    j["qfi_numeric"] =
        row.qfi_numeric ? json_number(*row.qfi_numeric) : nullptr;
    j["qcrb"] = json_number(row.qcrb);
    j["saturation_ratio"] = json_number(row.saturation_ratio);
    j["flags"] = row.flags;
    table.push_back(std::move(j));
  }
  return table.dump(2) + "\n";
}

std::filesystem::path resolve_output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("SU11NET_OUT_DIR"))
    if (*dir) return std::filesystem::path(dir) / p;
  return p;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out)
    throw std::runtime_error("cannot write output file " + path.string());
}

}  // namespace su11net::experiment
