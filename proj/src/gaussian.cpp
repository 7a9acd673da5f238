#include "su11net/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "su11net/linalg.hpp"

namespace su11net::gaussian {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_mode(const GaussianState& s, int mode) {
  if (mode < 0 || mode >= s.modes())
    throw std::out_of_range("mode " + std::to_string(mode) +
                            " out of range for " + std::to_string(s.modes()) +
                            "-mode state");
}

// Applies the symplectic map mean -> f mean, cov -> f cov f^T and re-imposes
// the exact symmetry of the covariance.
GaussianState transformed(const GaussianState& s, const Eigen::MatrixXd& f) {
  GaussianState out = s;
  out.mutable_mean() = f * s.mean();
  Eigen::MatrixXd c = f * s.cov() * f.transpose();
  out.mutable_cov() = 0.5 * (c + c.transpose().eval());
  return out;
}

// Embeds a one-mode 2x2 block into the full 2M x 2M symplectic matrix.
Eigen::MatrixXd embed_block(int modes, int mode, const Eigen::Matrix2d& b) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  const int x = mode;
  const int p = modes + mode;
  f(x, x) = b(0, 0);
  f(x, p) = b(0, 1);
  f(p, x) = b(1, 0);
  f(p, p) = b(1, 1);
  return f;
}

GaussianState squeeze_signed(const GaussianState& s, int mode, double r,
                             double beta, double sign) {
  check_mode(s, mode);
  if (r < 0.0)
    throw std::invalid_argument("squeeze strength must be nonnegative");
  const double ch = std::cosh(r);
  const double sh = sign * std::sinh(r);
  Eigen::Matrix2d b;
  b << ch + sh * std::cos(beta), sh * std::sin(beta), sh * std::sin(beta),
      ch - sh * std::cos(beta);
  return transformed(s, embed_block(s.modes(), mode, b));
}

}  // namespace

GaussianState::GaussianState(int modes) : modes_(modes) {
  if (modes < 1) throw std::invalid_argument("state needs at least one mode");
  mean_ = Eigen::VectorXd::Zero(2 * modes);
  cov_ = 0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
}

Eigen::Vector2d GaussianState::mode_mean(int mode) const {
  check_mode(*this, mode);
  return {mean_(mode), mean_(modes_ + mode)};
}

Eigen::Matrix2d GaussianState::mode_cov(int mode) const {
  check_mode(*this, mode);
  const int x = mode;
  const int p = modes_ + mode;
  Eigen::Matrix2d c;
  c << cov_(x, x), cov_(x, p), cov_(p, x), cov_(p, p);
  return c;
}

GaussianState vacuum(int modes) { return GaussianState(modes); }

GaussianState squeeze(const GaussianState& s, int mode, double r,
                      double beta) {
  return squeeze_signed(s, mode, r, beta, 1.0);
}

GaussianState squeeze_inverse(const GaussianState& s, int mode, double r,
                              double beta) {
  return squeeze_signed(s, mode, r, beta, -1.0);
}

GaussianState displace(const GaussianState& s, int mode,
                       std::complex<double> alpha) {
  check_mode(s, mode);
  GaussianState out = s;
  out.mutable_mean()(mode) += kSqrt2 * alpha.real();
  out.mutable_mean()(s.modes() + mode) += kSqrt2 * alpha.imag();
  return out;
}

GaussianState rotate(const GaussianState& s, int mode, double phi) {
  check_mode(s, mode);
  Eigen::Matrix2d b;
  b << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return transformed(s, embed_block(s.modes(), mode, b));
}

GaussianState apply_passive(const GaussianState& s,
                            const Eigen::MatrixXcd& u) {
  if (u.rows() != s.modes() || u.cols() != s.modes())
    throw std::invalid_argument(
        "passive network is " + std::to_string(u.rows()) + "x" +
        std::to_string(u.cols()) + " but the state has " +
        std::to_string(s.modes()) + " modes");
  const double defect = linalg::unitarity_defect(u);
  if (defect > 1e-10)
    throw std::invalid_argument("passive network is not unitary: defect " +
                                std::to_string(defect));
  const int m = s.modes();
  Eigen::MatrixXd f(2 * m, 2 * m);
  f.topLeftCorner(m, m) = u.real();
  f.topRightCorner(m, m) = -u.imag();
  f.bottomLeftCorner(m, m) = u.imag();
  f.bottomRightCorner(m, m) = u.real();
  return transformed(s, f);
}

GaussianState apply(const GaussianState& s, const Element& e) {
  return std::visit(
      [&](const auto& op) -> GaussianState {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, SqueezeOp>)
          return op.inverse ? squeeze_inverse(s, op.mode, op.r, op.beta)
                            : squeeze(s, op.mode, op.r, op.beta);
        else if constexpr (std::is_same_v<T, DisplaceOp>)
          return displace(s, op.mode, op.alpha);
        else if constexpr (std::is_same_v<T, RotateOp>)
          return rotate(s, op.mode, op.phi);
        else
          return apply_passive(s, op.unitary);
      },
      e);
}

double photon_mean(const GaussianState& s, int mode) {
  check_mode(s, mode);
  const Eigen::Matrix2d c = s.mode_cov(mode);
  const Eigen::Vector2d d = s.mode_mean(mode);
  return 0.5 * (c(0, 0) + c(1, 1) - 1.0) + 0.5 * d.squaredNorm();
}

double photon_variance(const GaussianState& s, int mode) {
  check_mode(s, mode);
  const Eigen::Matrix2d c = s.mode_cov(mode);
  const Eigen::Vector2d d = s.mode_mean(mode);
  const double tr_c2 = (c * c).trace();
  return 0.5 * (tr_c2 - 0.5) + d.dot(c * d);
}

double total_photon_mean(const GaussianState& s) {
  double sum = 0.0;
  for (int m = 0; m < s.modes(); ++m) sum += photon_mean(s, m);
  return sum;
}

std::complex<double> coherent_amplitude(const GaussianState& s, int mode) {
  const Eigen::Vector2d d = s.mode_mean(mode);
  return {d(0) / kSqrt2, d(1) / kSqrt2};
}

QuadratureStats quadrature_stats(const GaussianState& s, int mode) {
  check_mode(s, mode);
  QuadratureStats q;
  q.mean = s.mean()(s.modes() + mode) / kSqrt2;
  q.variance = 0.5 * s.cov()(s.modes() + mode, s.modes() + mode);
  return q;
}

double purity_defect(const GaussianState& s) {
  const Eigen::MatrixXd twice = 2.0 * s.cov();
  return std::abs(twice.determinant() - 1.0);
}

double uncertainty_floor(const GaussianState& s) {
  const int m = s.modes();
  Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  omega.topRightCorner(m, m) = Eigen::MatrixXcd::Identity(m, m);
  omega.bottomLeftCorner(m, m) = -Eigen::MatrixXcd::Identity(m, m);
  Eigen::MatrixXcd b =
      s.cov().cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * omega;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b);
  return solver.eigenvalues().minCoeff();
}

}  // namespace su11net::gaussian
