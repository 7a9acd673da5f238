#include "su11net/circuit.hpp"

#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace su11net::circuit {

namespace {

constexpr double kPi = 3.141592653589793;

bool power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / double(v.size());
}

void append_preparation(const Pipeline& p, std::vector<Element>& out) {
  if (p.scheme == Scheme::kNetworkPhaseHomodyne && p.alpha_seed != 0.0)
    out.push_back(DisplaceOp{0, std::complex<double>(p.alpha_seed, 0.0)});
  out.push_back(SqueezeOp{0, p.r, p.beta, false});
  out.push_back(PassiveOp{distributor_matrix(p.distributor, p.modes)});
}

void append_encoding(const Pipeline& p, const std::vector<double>& enc,
                     std::vector<Element>& out) {
  for (int j = 0; j < p.modes; ++j) {
    if (is_phase_scheme(p.scheme))
      out.push_back(RotateOp{j, enc[j]});
    else
      out.push_back(DisplaceOp{j, std::complex<double>(enc[j], 0.0)});
  }
}

void append_inverse_preparation(const Pipeline& p, std::vector<Element>& out) {
  out.push_back(
      PassiveOp{distributor_matrix(p.distributor, p.modes).adjoint()});
  out.push_back(SqueezeOp{0, p.r, p.beta, true});
}

}  // namespace

const char* scheme_id(Scheme s) {
  switch (s) {
    case Scheme::kSingleDisplacement:
      return "single-displacement";
    case Scheme::kSinglePhase:
      return "single-phase";
    case Scheme::kNetworkDisplacement:
      return "network-displacement";
    case Scheme::kNetworkPhase:
      return "network-phase";
    case Scheme::kNetworkPhaseHomodyne:
      return "network-phase-homodyne";
  }
  return "unknown";
}

std::optional<Scheme> scheme_from_id(std::string_view id) {
  for (Scheme s : {Scheme::kSingleDisplacement, Scheme::kSinglePhase,
                   Scheme::kNetworkDisplacement, Scheme::kNetworkPhase,
                   Scheme::kNetworkPhaseHomodyne})
    if (id == scheme_id(s)) return s;
  return std::nullopt;
}

bool is_phase_scheme(Scheme s) {
  return s == Scheme::kSinglePhase || s == Scheme::kNetworkPhase ||
         s == Scheme::kNetworkPhaseHomodyne;
}

bool is_single_scheme(Scheme s) {
  return s == Scheme::kSingleDisplacement || s == Scheme::kSinglePhase;
}

const char* distributor_id(DistributorKind k) {
  return k == DistributorKind::kDft ? "dft" : "hadamard";
}

std::optional<DistributorKind> distributor_from_id(std::string_view id) {
  if (id == "dft") return DistributorKind::kDft;
  if (id == "hadamard") return DistributorKind::kHadamard;
  return std::nullopt;
}

Eigen::MatrixXcd distributor_matrix(DistributorKind kind, int modes) {
  if (modes < 1)
    throw std::invalid_argument("distributor needs at least one mode");
  const double scale = 1.0 / std::sqrt(double(modes));
  Eigen::MatrixXcd u(modes, modes);
  if (kind == DistributorKind::kDft) {
    for (int j = 0; j < modes; ++j)
      for (int k = 0; k < modes; ++k)
        u(j, k) = std::polar(scale, 2.0 * kPi * double(j) * double(k) /
                                        double(modes));
    return u;
  }
  if (!power_of_two(modes))
    throw std::invalid_argument(
        "hadamard distributor needs a power-of-two mode count, got " +
        std::to_string(modes));
  Eigen::MatrixXd h(1, 1);
  h(0, 0) = 1.0;
  while (h.rows() < modes) {
    const int n = static_cast<int>(h.rows());
    Eigen::MatrixXd next(2 * n, 2 * n);
    next.topLeftCorner(n, n) = h;
    next.topRightCorner(n, n) = h;
    next.bottomLeftCorner(n, n) = h;
    next.bottomRightCorner(n, n) = -h;
    h = next;
  }
  u = scale * h.cast<std::complex<double>>();
  return u;
}

Pipeline make_pipeline(Scheme scheme, int modes, double r,
                       std::optional<double> beta,
                       DistributorKind distributor,
                       std::vector<double> encoding, double alpha_seed) {
  if (modes < 1) throw std::invalid_argument("mode count must be positive");
  if (is_single_scheme(scheme) && modes != 1)
    throw std::invalid_argument(std::string(scheme_id(scheme)) +
                                " is a one-mode scheme, got " +
                                std::to_string(modes) + " modes");
  if (r < 0.0)
    throw std::invalid_argument("squeeze strength must be nonnegative");
  if (encoding.size() != static_cast<std::size_t>(modes))
    throw std::invalid_argument(
        "encoding has " + std::to_string(encoding.size()) +
        " entries but the network has " + std::to_string(modes) + " modes");
  if (distributor == DistributorKind::kHadamard && !power_of_two(modes))
    throw std::invalid_argument(
        "hadamard distributor needs a power-of-two mode count, got " +
        std::to_string(modes));
  if (alpha_seed != 0.0 && scheme != Scheme::kNetworkPhaseHomodyne)
    throw std::invalid_argument(
        "a coherent seed applies only to the homodyne scheme");

  Pipeline p;
  p.scheme = scheme;
  p.modes = modes;
  p.r = r;
  p.beta = beta.value_or(is_phase_scheme(scheme) ? 0.0 : kPi);
  p.alpha_seed = alpha_seed;
  p.distributor = distributor;
  p.encoding = std::move(encoding);
  return p;
}

Pipeline with_encoding(Pipeline p, std::vector<double> encoding) {
  if (encoding.size() != static_cast<std::size_t>(p.modes))
    throw std::invalid_argument(
        "encoding has " + std::to_string(encoding.size()) +
        " entries but the network has " + std::to_string(p.modes) + " modes");
  p.encoding = std::move(encoding);
  return p;
}

std::vector<Element> elements(const Pipeline& p) {
  std::vector<Element> out;
  append_preparation(p, out);
  append_encoding(p, p.encoding, out);
  append_inverse_preparation(p, out);
  return out;
}

std::vector<Element> encoding_stage(const Pipeline& p) {
  std::vector<Element> out;
  append_preparation(p, out);
  append_encoding(p, p.encoding, out);
  return out;
}

gaussian::GaussianState run_gaussian(const Pipeline& p) {
  gaussian::GaussianState s = gaussian::vacuum(p.modes);
  for (const Element& e : elements(p)) s = gaussian::apply(s, e);
  return s;
}

fock::FockState run_fock(const Pipeline& p, int cutoff, double guard) {
  return fock::run_elements(fock::vacuum(p.modes, cutoff), elements(p), guard);
}

fock::FockState encoded_fock(const Pipeline& p, int cutoff, double guard) {
  return fock::run_elements(fock::vacuum(p.modes, cutoff), encoding_stage(p),
                            guard);
}

std::vector<double> encoding_at(const Pipeline& p, double eta) {
  const double base = mean_of(p.encoding);
  std::vector<double> enc = p.encoding;
  for (double& v : enc) v += eta - base;
  return enc;
}

std::function<fock::FockState(double)> fock_encoding_family(const Pipeline& p,
                                                            int cutoff,
                                                            double guard) {
  std::vector<Element> prep;
  append_preparation(p, prep);
  auto prefix = std::make_shared<const fock::FockState>(
      fock::run_elements(fock::vacuum(p.modes, cutoff), prep, guard));
  const Pipeline pipeline = p;
  return [prefix, pipeline, guard](double eta) {
    std::vector<Element> enc;
    append_encoding(pipeline, encoding_at(pipeline, eta), enc);
    return fock::run_elements(*prefix, enc, guard);
  };
}

}  // namespace su11net::circuit
