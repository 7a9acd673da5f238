#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace su11net {

// Circuit elements shared by both state backends.  Conventions:
//   squeeze:  S(zeta) = exp(zeta a^dag^2 / 2 - conj(zeta) a^2 / 2),
//             zeta = r exp(i beta); the Heisenberg action is
//             S^dag a S = a cosh r + a^dag exp(i beta) sinh r.
//   displace: D(alpha) = exp(alpha a^dag - conj(alpha) a).
//   rotate:   exp(+i phi n); expectation values pick up <a> -> exp(i phi)<a>.
//   passive:  photon-number preserving network with <a_i> -> sum_l U_il <a_l>.

struct SqueezeOp {
  int mode = 0;
  double r = 0.0;
  double beta = 0.0;
  bool inverse = false;
};

struct DisplaceOp {
  int mode = 0;
  std::complex<double> alpha;
};

struct RotateOp {
  int mode = 0;
  double phi = 0.0;
};

struct PassiveOp {
  Eigen::MatrixXcd unitary;
};

using Element = std::variant<SqueezeOp, DisplaceOp, RotateOp, PassiveOp>;

}  // namespace su11net
