#pragma once

#include <complex>

#include <Eigen/Dense>

#include "su11net/elements.hpp"

namespace su11net::gaussian {

// Gaussian state over M modes: quadrature mean vector and covariance matrix
// in the ordering (x_1 .. x_M, p_1 .. p_M), with x = (a + a^dag)/sqrt(2),
// p = (a - a^dag)/(i sqrt(2)) and vacuum covariance I/2.
//
// States are immutable values: every operation returns a new state, so a
// parameter sweep can fan out over threads without shared mutable data.
class GaussianState {
public:
  explicit GaussianState(int modes);

  int modes() const { return modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  Eigen::Vector2d mode_mean(int mode) const;
  Eigen::Matrix2d mode_cov(int mode) const;

  Eigen::VectorXd& mutable_mean() { return mean_; }
  Eigen::MatrixXd& mutable_cov() { return cov_; }

private:
  int modes_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
};

GaussianState vacuum(int modes);

GaussianState squeeze(const GaussianState& s, int mode, double r, double beta);
GaussianState squeeze_inverse(const GaussianState& s, int mode, double r,
                              double beta);
GaussianState displace(const GaussianState& s, int mode,
                       std::complex<double> alpha);
GaussianState rotate(const GaussianState& s, int mode, double phi);
// u acts on annihilation operators as <a_i> -> sum_l u_il <a_l>; throws
// std::invalid_argument when u is not unitary (defect above 1e-10) or its
// dimension does not match the state.
GaussianState apply_passive(const GaussianState& s, const Eigen::MatrixXcd& u);

GaussianState apply(const GaussianState& s, const Element& e);

double photon_mean(const GaussianState& s, int mode);
double photon_variance(const GaussianState& s, int mode);
double total_photon_mean(const GaussianState& s);
std::complex<double> coherent_amplitude(const GaussianState& s, int mode);

// Statistics of the measured quadrature Y = (a - a^dag)/(2i) = p/sqrt(2);
// vacuum gives mean 0, variance 1/4.
struct QuadratureStats {
  double mean = 0.0;
  double variance = 0.0;
};
QuadratureStats quadrature_stats(const GaussianState& s, int mode);

// |det(2 cov) - 1|; zero for pure states.
double purity_defect(const GaussianState& s);
// Smallest eigenvalue of cov + (i/2) Omega; physical states are >= 0 up to
// rounding.
double uncertainty_floor(const GaussianState& s);

}  // namespace su11net::gaussian
