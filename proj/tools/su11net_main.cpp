#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "su11net/config.hpp"
#include "su11net/experiment.hpp"
#include "su11net/verify.hpp"

namespace {

// Exit codes: 0 clean run, 1 I/O or verification failure, 2 configuration
// errors, 3 completed run with flagged rows.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;
constexpr int kFlaggedRows = 3;

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> backend;
  std::optional<int> cutoff;
  std::optional<double> seed_point;
  std::optional<double> r;
  std::optional<int> modes;
  std::optional<double> beta;
  std::optional<double> alpha_seed;
  std::optional<std::string> distributor;
  std::optional<std::string> encoding;
  std::optional<double> sweep_start;
  std::optional<double> sweep_stop;
  std::optional<int> sweep_steps;
};

void add_common_options(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "experiment config file");
  cmd->add_option("--out", f.out,
                  "output file (relative paths land in $SU11NET_OUT_DIR)");
  cmd->add_option("--format", f.format, "output format: csv or json");
  cmd->add_option("--backend", f.backend, "state backend: gaussian or fock");
  cmd->add_option("--cutoff", f.cutoff,
                  "number-basis levels per mode (fock backend)");
  cmd->add_option("--seed-point", f.seed_point,
                  "evaluation point for the sensitivity estimate");
  cmd->add_option("--r", f.r, "squeezing strength");
  cmd->add_option("--modes", f.modes, "network size M");
  cmd->add_option("--beta", f.beta, "squeezing phase");
  cmd->add_option("--alpha-seed", f.alpha_seed,
                  "coherent seed (homodyne scheme)");
  cmd->add_option("--distributor", f.distributor,
                  "network distributor: dft or hadamard");
  cmd->add_option("--encoding", f.encoding,
                  "node values: '[a, b, ...]', 'uniform v' or "
                  "'alternating v'");
  cmd->add_option("--sweep-start", f.sweep_start, "first squeezing value");
  cmd->add_option("--sweep-stop", f.sweep_stop, "last squeezing value");
  cmd->add_option("--sweep-steps", f.sweep_steps, "number of sweep rows");
}

int fail_config(const std::vector<std::string>& errors) {
  for (const std::string& e : errors) std::cerr << "config: " << e << "\n";
  return kConfigError;
}

int run_scheme(const Flags& f, std::optional<su11net::circuit::Scheme> scheme) {
  namespace config = su11net::config;
  namespace experiment = su11net::experiment;

  config::ExperimentConfig cfg;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) {
      std::cerr << "cannot read config file " << *f.config << "\n";
      return kFailure;
    }
    std::ostringstream text;
    text << in.rdbuf();
    config::ParseResult parsed = config::parse_config(text.str());
    if (!parsed.ok()) return fail_config(parsed.errors);
    cfg = *parsed.config;
  }

  if (scheme) cfg.scheme = *scheme;
  if (f.modes) cfg.modes = *f.modes;
  if (f.r) {
    cfg.r = *f.r;
    cfg.sweep.reset();
  }
  if (f.sweep_start || f.sweep_stop || f.sweep_steps) {
    if (!(f.sweep_start && f.sweep_stop && f.sweep_steps))
      return fail_config({"--sweep-start, --sweep-stop and --sweep-steps "
                          "go together"});
    cfg.sweep = config::SweepSpec{*f.sweep_start, *f.sweep_stop,
                                  *f.sweep_steps};
    cfg.r.reset();
  }
  if (f.beta) cfg.beta = *f.beta;
  if (f.alpha_seed) cfg.alpha_seed = *f.alpha_seed;
  if (f.seed_point) cfg.eval_point = *f.seed_point;
  if (f.distributor) {
    auto d = su11net::circuit::distributor_from_id(*f.distributor);
    if (!d)
      return fail_config({"unknown distributor '" + *f.distributor + "'"});
    cfg.distributor = *d;
  }
  if (f.encoding) {
    std::string error;
    auto spec = config::parse_encoding_text(*f.encoding, &error);
    if (!spec) return fail_config({error});
    cfg.encoding = *spec;
  }
  if (f.backend) {
    if (*f.backend == "gaussian") {
      cfg.backend = su11net::circuit::Backend::gaussian();
    } else if (*f.backend == "fock") {
      const int cutoff = f.cutoff.value_or(cfg.backend.cutoff);
      if (cutoff <= 0)
        return fail_config({"--backend fock needs --cutoff"});
      cfg.backend = su11net::circuit::Backend::fock(cutoff);
    } else {
      return fail_config({"unknown backend '" + *f.backend + "'"});
    }
  } else if (f.cutoff) {
    if (cfg.backend.kind != su11net::circuit::Backend::Kind::kFock)
      return fail_config({"--cutoff needs --backend fock"});
    cfg.backend = su11net::circuit::Backend::fock(*f.cutoff);
  }
  if (f.out) cfg.out_path = *f.out;
  if (f.format) {
    if (*f.format == "csv")
      cfg.format = config::OutputFormat::kCsv;
    else if (*f.format == "json")
      cfg.format = config::OutputFormat::kJson;
    else
      return fail_config({"unknown format '" + *f.format + "'"});
  }

  // One validator for both the file and the flag overrides: the canonical
  // text form round-trips through the parser.
  config::ParseResult checked = config::parse_config(config::to_text(cfg));
  if (!checked.ok()) return fail_config(checked.errors);

  const experiment::RunResult result = experiment::run_experiment(*checked.config);
  const std::string payload = checked.config->format == config::OutputFormat::kJson
                                  ? experiment::to_json(result.rows)
                                  : experiment::to_csv(result.rows);
  if (checked.config->out_path) {
    try {
      experiment::write_file(
          experiment::resolve_output_path(*checked.config->out_path), payload);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kFailure;
    }
  } else {
    std::cout << payload;
  }
  return result.any_flagged ? kFlaggedRows : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sensitivity and Fisher-information studies of squeezed-probe "
      "interferometer networks"};
  app.require_subcommand(1);

  Flags flags;
  std::optional<su11net::circuit::Scheme> scheme;
  bool do_verify = false;

  for (su11net::circuit::Scheme s :
       {su11net::circuit::Scheme::kSingleDisplacement,
        su11net::circuit::Scheme::kSinglePhase,
        su11net::circuit::Scheme::kNetworkDisplacement,
        su11net::circuit::Scheme::kNetworkPhase,
        su11net::circuit::Scheme::kNetworkPhaseHomodyne}) {
    CLI::App* cmd = app.add_subcommand(
        su11net::circuit::scheme_id(s),
        std::string("run the ") + su11net::circuit::scheme_id(s) + " scheme");
    add_common_options(cmd, flags);
    cmd->callback([&scheme, s] { scheme = s; });
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "sweep", "run the scheme named in the config over a squeezing sweep");
    add_common_options(cmd, flags);
  }
  {
    CLI::App* cmd = app.add_subcommand(
        "verify",
        "run the acceptance suite against the closed-form benchmarks");
    cmd->callback([&do_verify] { do_verify = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (do_verify) {
    const int failures = su11net::verify::report(std::cout);
    return failures == 0 ? kOk : kFailure;
  }
  try {
    return run_scheme(flags, scheme);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
}
