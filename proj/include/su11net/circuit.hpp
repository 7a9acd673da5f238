#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su11net/elements.hpp"
#include "su11net/fock.hpp"
#include "su11net/gaussian.hpp"

namespace su11net::circuit {

// Measurement schemes.  Every scheme squeezes port 1, distributes the probe
// over the network, encodes a parameter on each node, then runs the exact
// inverse of the preparation so that the readout happens back at port 1.
enum class Scheme {
  kSingleDisplacement,
  kSinglePhase,
  kNetworkDisplacement,
  kNetworkPhase,
  kNetworkPhaseHomodyne,
};

const char* scheme_id(Scheme s);
std::optional<Scheme> scheme_from_id(std::string_view id);
bool is_phase_scheme(Scheme s);   // phase or homodyne encodings
bool is_single_scheme(Scheme s);  // fixed at one mode

enum class DistributorKind { kDft, kHadamard };

const char* distributor_id(DistributorKind k);
std::optional<DistributorKind> distributor_from_id(std::string_view id);

// Balanced M-port distributor: every column-1 magnitude is 1/sqrt(M), so the
// probe spreads evenly.  kDft is defined for any M; kHadamard requires M a
// power of two and throws std::invalid_argument otherwise.
Eigen::MatrixXcd distributor_matrix(DistributorKind kind, int modes);

struct Pipeline {
  Scheme scheme = Scheme::kSingleDisplacement;
  int modes = 1;
  double r = 0.0;
  double beta = 0.0;
  double alpha_seed = 0.0;  // coherent seed, homodyne scheme only
  DistributorKind distributor = DistributorKind::kDft;
  std::vector<double> encoding;  // one entry per mode
};

// Validates and assembles a pipeline.  When beta is not given it defaults to
// pi for displacement encodings and 0 for phase encodings, which aligns the
// squeezed quadrature with the signal in each case.
Pipeline make_pipeline(Scheme scheme, int modes, double r,
                       std::optional<double> beta, DistributorKind distributor,
                       std::vector<double> encoding, double alpha_seed = 0.0);

Pipeline with_encoding(Pipeline p, std::vector<double> encoding);

// Full element sequence: preparation, encoding, inverse preparation.
std::vector<Element> elements(const Pipeline& p);
// Preparation and encoding only; the state that carries the parameter
// information, used by the Fisher-information estimators.
std::vector<Element> encoding_stage(const Pipeline& p);

struct Backend {
  enum class Kind { kGaussian, kFock };
  Kind kind = Kind::kGaussian;
  int cutoff = 0;        // number-basis levels per mode (kFock only)
  double guard = 1e-10;  // truncation-weight guard (kFock only)

  static Backend gaussian() { return {}; }
  static Backend fock(int cutoff, double guard = 1e-10) {
    return {Kind::kFock, cutoff, guard};
  }
};

gaussian::GaussianState run_gaussian(const Pipeline& p);
fock::FockState run_fock(const Pipeline& p, int cutoff, double guard = 1e-10);
fock::FockState encoded_fock(const Pipeline& p, int cutoff,
                             double guard = 1e-10);

// One-parameter family over the network average: the encoding offsets of `p`
// are kept and their mean is moved to eta.  The prepared state ahead of the
// encoding is computed once and shared across evaluations.
std::function<fock::FockState(double)> fock_encoding_family(
    const Pipeline& p, int cutoff, double guard = 1e-10);

// Encoding vector with the same offsets as `p` but mean moved to eta.
std::vector<double> encoding_at(const Pipeline& p, double eta);

}  // namespace su11net::circuit
