#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su11net/circuit.hpp"

namespace su11net::metrology {

struct SignalStats {
  double mean = 0.0;
  double std_dev = 0.0;
};

// Photon-number signal read out at `port` after the full pipeline.
SignalStats signal_stats(const circuit::Pipeline& p, int port,
                         const circuit::Backend& backend);

struct Sensitivity {
  double delta = 0.0;              // std / |slope|
  double slope = 0.0;              // Richardson-refined central difference
  double slope_uncertainty = 0.0;  // disagreement between the two estimates
  SignalStats at_point;
};

// Smallest resolvable shift of the network average at eta0, from the photon
// signal at port 1.  The encoding offsets of `p` are preserved while their
// mean moves to the probe point, so inhomogeneous encodings keep their shape.
// A non-positive step selects max(1e-6, 1e-4 |eta0|).  Throws
// degenerate_slope when the signal slope vanishes at eta0, and
// std::invalid_argument for a non-positive eta0 under a phase encoding
// (the slope is zero there by symmetry).
Sensitivity error_sensitivity(const circuit::Pipeline& p, double eta0,
                              double step, const circuit::Backend& backend);

// Same estimate for the homodyne scheme, reading the Y quadrature at port 1
// instead of the photon number.  Requires a positive coherent seed.
Sensitivity homodyne_sensitivity(const circuit::Pipeline& p, double eta0,
                                 double step, const circuit::Backend& backend);

// Quantum Fisher information of the scheme's encoded state with respect to
// the network average.  `alpha` is the coherent seed and applies to the
// homodyne scheme only (required there, rejected elsewhere).
double qfi_closed_form(circuit::Scheme scheme, int modes, double r,
                       std::optional<double> alpha = std::nullopt);

struct CramerRaoBound {
  double value = 0.0;  // +infinity when unbounded
  bool unbounded = false;
};

// 1/sqrt(qfi); zero information leaves the bound unbounded, negative
// information is rejected.
CramerRaoBound qcrb_from_qfi(double qfi);

struct ReportOptions {
  circuit::Backend backend = circuit::Backend::gaussian();
  std::optional<double> eval_point;  // default: 0.1 displacement, 1e-4 phase
  std::optional<double> beta;
  circuit::DistributorKind distributor = circuit::DistributorKind::kDft;
  std::vector<double> encoding;  // empty: uniform at the evaluation point
  double alpha_seed = 0.0;
  bool numeric_qfi = false;  // cross-check QFI numerically (fock backend only)
  double qfi_step = 1e-4;
};

struct SensitivityReport {
  std::string scheme;
  int modes = 0;
  double r = 0.0;
  double beta = 0.0;
  double eval_point = 0.0;
  double signal = 0.0;
  double signal_std = 0.0;
  double slope = 0.0;
  double delta_measured = 0.0;
  double qfi_closed = 0.0;
  std::optional<double> qfi_numeric;
  double qcrb = 0.0;
  double saturation_ratio = 0.0;
  std::vector<std::string> flags;
};

double default_eval_point(circuit::Scheme scheme);

// One row of the saturation study: measured sensitivity next to the quantum
// bound, with caveat flags.
SensitivityReport saturation_report(circuit::Scheme scheme, int modes,
                                    double r, const ReportOptions& options);

}  // namespace su11net::metrology
