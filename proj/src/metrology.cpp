#include "su11net/metrology.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "su11net/errors.hpp"

namespace su11net::metrology {

namespace {

using circuit::Backend;
using circuit::Pipeline;
using circuit::Scheme;

constexpr double kSlopeFloor = 1e-14;

SignalStats photon_stats(const Pipeline& p, int port, const Backend& b) {
  if (b.kind == Backend::Kind::kGaussian) {
    const gaussian::GaussianState s = circuit::run_gaussian(p);
    return {gaussian::photon_mean(s, port),
            std::sqrt(gaussian::photon_variance(s, port))};
  }
  const fock::FockState s = circuit::run_fock(p, b.cutoff, b.guard);
  const auto [mean, var] = fock::photon_moments(s, port);
  return {mean, std::sqrt(var)};
}

// Mean and spread of the measured quadrature Y = (a - a^dag)/(2i) at `port`.
SignalStats quadrature_signal(const Pipeline& p, int port, const Backend& b) {
  if (b.kind == Backend::Kind::kGaussian) {
    const gaussian::GaussianState s = circuit::run_gaussian(p);
    const auto q = gaussian::quadrature_stats(s, port);
    return {q.mean, std::sqrt(q.variance)};
  }
  const fock::FockState s = circuit::run_fock(p, b.cutoff, b.guard);
  const double n_mean = fock::photon_moments(s, port).first;
  const auto a1 = fock::lowering_expectation(s, port);
  const auto a2 = fock::lowering_squared_expectation(s, port);
  const double mean = a1.imag();
  const double second = 0.25 * (2.0 * n_mean + 1.0 - 2.0 * a2.real());
  return {mean, std::sqrt(second - mean * mean)};
}

double resolve_step(double step, double eta0) {
  if (step > 0.0) return step;
  return std::max(1e-6, 1e-4 * std::abs(eta0));
}

struct Slope {
  double value = 0.0;
  double uncertainty = 0.0;
};

// Central difference at two step sizes with one Richardson refinement; the
// disagreement between the refined and coarse estimates is kept as the
// uncertainty.
template <typename F>
Slope refined_slope(const F& signal, double eta0, double h) {
  const double d1 = (signal(eta0 + h) - signal(eta0 - h)) / (2.0 * h);
  const double d2 = (signal(eta0 + 0.5 * h) - signal(eta0 - 0.5 * h)) / h;
  return {(4.0 * d2 - d1) / 3.0, std::abs(d2 - d1) / 3.0};
}

template <typename SignalFn, typename StatsFn>
Sensitivity sensitivity_from(const SignalFn& signal, const StatsFn& stats,
                             double eta0, double h) {
  const Slope slope = refined_slope(signal, eta0, h);
  if (std::abs(slope.value) < kSlopeFloor) throw degenerate_slope(eta0);
  Sensitivity out;
  out.slope = slope.value;
  out.slope_uncertainty = slope.uncertainty;
  out.at_point = stats(eta0);
  out.delta = out.at_point.std_dev / std::abs(slope.value);
  return out;
}

}  // namespace

SignalStats signal_stats(const Pipeline& p, int port, const Backend& backend) {
  return photon_stats(p, port, backend);
}

Sensitivity error_sensitivity(const Pipeline& p, double eta0, double step,
                              const Backend& backend) {
  if (circuit::is_phase_scheme(p.scheme) && !(eta0 > 0.0))
    throw std::invalid_argument(
        "phase evaluation point must be positive: the photon signal is "
        "quadratic around zero and has no slope there");
  const double h = resolve_step(step, eta0);
  auto signal = [&](double eta) {
    return photon_stats(circuit::with_encoding(p, circuit::encoding_at(p, eta)),
                        0, backend)
        .mean;
  };
  auto stats = [&](double eta) {
    return photon_stats(circuit::with_encoding(p, circuit::encoding_at(p, eta)),
                        0, backend);
  };
  return sensitivity_from(signal, stats, eta0, h);
}

Sensitivity homodyne_sensitivity(const Pipeline& p, double eta0, double step,
                                 const Backend& backend) {
  if (p.scheme != Scheme::kNetworkPhaseHomodyne)
    throw std::invalid_argument(
        "homodyne readout applies to the network-phase-homodyne scheme only");
  if (!(p.alpha_seed > 0.0))
    throw std::invalid_argument(
        "homodyne readout needs a positive coherent seed");
  const double h = resolve_step(step, eta0);
  auto signal = [&](double eta) {
    return quadrature_signal(
               circuit::with_encoding(p, circuit::encoding_at(p, eta)), 0,
               backend)
        .mean;
  };
  auto stats = [&](double eta) {
    return quadrature_signal(
        circuit::with_encoding(p, circuit::encoding_at(p, eta)), 0, backend);
  };
  return sensitivity_from(signal, stats, eta0, h);
}

double qfi_closed_form(Scheme scheme, int modes, double r,
                       std::optional<double> alpha) {
  if (modes < 1) throw std::invalid_argument("mode count must be positive");
  if (circuit::is_single_scheme(scheme) && modes != 1)
    throw std::invalid_argument(std::string(circuit::scheme_id(scheme)) +
                                " is a one-mode scheme");
  if (r < 0.0)
    throw std::invalid_argument("squeeze strength must be nonnegative");
  if (alpha.has_value() && scheme != Scheme::kNetworkPhaseHomodyne)
    throw std::invalid_argument(
        "a coherent seed applies only to the homodyne scheme");
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  switch (scheme) {
    case Scheme::kSingleDisplacement:
      return 4.0 * std::exp(2.0 * r);
    case Scheme::kNetworkDisplacement:
      return 4.0 * double(modes) * std::exp(2.0 * r);
    case Scheme::kSinglePhase:
    case Scheme::kNetworkPhase:
      return 8.0 * sh * sh * (1.0 + sh * sh);
    case Scheme::kNetworkPhaseHomodyne: {
      if (!alpha.has_value())
        throw std::invalid_argument(
            "the squeezed-coherent form needs the coherent seed amplitude");
      const double a = *alpha;
      const double s2 = sh * sh;
      return 4.0 * (s2 * s2 + s2 + s2 * ch * ch +
                    a * a * std::exp(2.0 * r) * (1.0 + 2.0 * s2 + 2.0 * sh * ch));
    }
  }
  throw std::invalid_argument("unknown scheme");
}

CramerRaoBound qcrb_from_qfi(double qfi) {
  if (qfi < 0.0)
    throw std::invalid_argument("Fisher information cannot be negative");
  if (qfi == 0.0)
    return {std::numeric_limits<double>::infinity(), true};
  return {1.0 / std::sqrt(qfi), false};
}

double default_eval_point(circuit::Scheme scheme) {
  return circuit::is_phase_scheme(scheme) ? 1e-4 : 0.1;
}

SensitivityReport saturation_report(Scheme scheme, int modes, double r,
                                    const ReportOptions& options) {
  const double eval = options.eval_point.value_or(default_eval_point(scheme));
  std::vector<double> enc = options.encoding.empty()
                                ? std::vector<double>(modes, eval)
                                : options.encoding;
  const Pipeline p =
      circuit::make_pipeline(scheme, modes, r, options.beta,
                             options.distributor, std::move(enc),
                             options.alpha_seed);

  const bool homodyne = scheme == Scheme::kNetworkPhaseHomodyne;
  const Sensitivity sens =
      homodyne ? homodyne_sensitivity(p, eval, 0.0, options.backend)
               : error_sensitivity(p, eval, 0.0, options.backend);
  const double qfi =
      qfi_closed_form(scheme, modes, r,
                      homodyne ? std::optional<double>(options.alpha_seed)
                               : std::nullopt);
  const CramerRaoBound bound = qcrb_from_qfi(qfi);

  SensitivityReport rep;
  rep.scheme = circuit::scheme_id(scheme);
  rep.modes = modes;
  rep.r = r;
  rep.beta = p.beta;
  rep.eval_point = eval;
  rep.signal = sens.at_point.mean;
  rep.signal_std = sens.at_point.std_dev;
  rep.slope = sens.slope;
  rep.delta_measured = sens.delta;
  rep.qfi_closed = qfi;
  rep.qcrb = bound.value;
  rep.saturation_ratio =
      bound.unbounded ? std::numeric_limits<double>::quiet_NaN()
                      : sens.delta / bound.value;

  if (bound.unbounded) rep.flags.push_back("no-information");
  if ((scheme == Scheme::kSinglePhase || scheme == Scheme::kNetworkPhase) &&
      r < 1.0)
    rep.flags.push_back("small-r-phase");

  if (options.numeric_qfi) {
    if (options.backend.kind != Backend::Kind::kFock)
      throw std::invalid_argument(
          "the numeric Fisher-information cross-check needs the fock backend");
    const auto family = circuit::fock_encoding_family(
        p, options.backend.cutoff, options.backend.guard);
    const fock::QfiResult qr = fock::qfi_numeric(family, eval, options.qfi_step);
    rep.qfi_numeric = qr.value;
    if (!qr.converged) rep.flags.push_back("qfi-not-converged");
  }
  return rep;
}

}  // namespace su11net::metrology
