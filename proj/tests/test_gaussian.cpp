#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "su11net/gaussian.hpp"

using namespace su11net;
using gaussian::GaussianState;
using std::complex;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("vacuum has zero mean and covariance I/2") {
  const GaussianState s = gaussian::vacuum(3);
  CHECK(s.modes() == 3);
  CHECK(s.mean().cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd want = 0.5 * Eigen::MatrixXd::Identity(6, 6);
  CHECK((s.cov() - want).cwiseAbs().maxCoeff() == 0.0);
  for (int m = 0; m < 3; ++m) {
    CHECK(gaussian::photon_mean(s, m) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(gaussian::photon_variance(s, m) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(gaussian::coherent_amplitude(s, m)) < 1e-15);
    const auto q = gaussian::quadrature_stats(s, m);
    CHECK(q.mean == doctest::Approx(0.0));
    CHECK(q.variance == doctest::Approx(0.25));
  }
  CHECK(gaussian::purity_defect(s) < 1e-13);
  CHECK(gaussian::uncertainty_floor(s) > -1e-13);
}

TEST_CASE("squeezed vacuum photon moments") {
  const double r = 1.0;
  const GaussianState s = gaussian::squeeze(gaussian::vacuum(1), 0, r, 0.3);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double ch2 = std::cosh(r) * std::cosh(r);
  CHECK(gaussian::photon_mean(s, 0) == doctest::Approx(sh2).epsilon(1e-12));
  // sinh(1)^2 = 1.3810978455418155 pinned once as a regression anchor.
  CHECK(gaussian::photon_mean(s, 0) ==
        doctest::Approx(1.3810978455418155).epsilon(1e-14));
  CHECK(gaussian::photon_variance(s, 0) ==
        doctest::Approx(2.0 * sh2 * ch2).epsilon(1e-12));
  CHECK(gaussian::purity_defect(s) < 1e-12);
}

TEST_CASE("squeezing with beta = 0 stretches x and shrinks p") {
  const double r = 0.7;
  const GaussianState s = gaussian::squeeze(gaussian::vacuum(1), 0, r, 0.0);
  const Eigen::Matrix2d c = s.mode_cov(0);
  CHECK(c(0, 0) == doctest::Approx(0.5 * std::exp(2.0 * r)).epsilon(1e-13));
  CHECK(c(1, 1) == doctest::Approx(0.5 * std::exp(-2.0 * r)).epsilon(1e-13));
  CHECK(std::abs(c(0, 1)) < 1e-13);
  // Y = p / sqrt(2), so its variance is a quarter of e^{-2r} * 2.
  const auto q = gaussian::quadrature_stats(s, 0);
  CHECK(q.variance ==
        doctest::Approx(0.25 * std::exp(-2.0 * r)).epsilon(1e-13));
}

TEST_CASE("squeeze_inverse restores the input state") {
  GaussianState s = gaussian::vacuum(2);
  s = gaussian::displace(s, 1, complex<double>(0.4, -0.2));
  const GaussianState forward = gaussian::squeeze(s, 0, 1.1, 0.4);
  const GaussianState back = gaussian::squeeze_inverse(forward, 0, 1.1, 0.4);
  CHECK((back.mean() - s.mean()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((back.cov() - s.cov()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rotation advances the coherent phase") {
  GaussianState s = gaussian::displace(gaussian::vacuum(1), 0,
                                       complex<double>(0.6, 0.0));
  const double n_before = gaussian::photon_mean(s, 0);
  s = gaussian::rotate(s, 0, 0.9);
  const complex<double> want = 0.6 * std::polar(1.0, 0.9);
  CHECK(std::abs(gaussian::coherent_amplitude(s, 0) - want) < 1e-13);
  CHECK(gaussian::photon_mean(s, 0) ==
        doctest::Approx(n_before).epsilon(1e-13));
}

TEST_CASE("coherent states have Poissonian photon statistics") {
  const complex<double> alpha(0.7, 0.2);
  const GaussianState s = gaussian::displace(gaussian::vacuum(1), 0, alpha);
  const double n = std::norm(alpha);
  CHECK(std::abs(gaussian::coherent_amplitude(s, 0) - alpha) < 1e-13);
  CHECK(gaussian::photon_mean(s, 0) == doctest::Approx(n).epsilon(1e-13));
  CHECK(gaussian::photon_variance(s, 0) == doctest::Approx(n).epsilon(1e-12));
  const auto q = gaussian::quadrature_stats(s, 0);
  CHECK(q.mean == doctest::Approx(alpha.imag()).epsilon(1e-13));
  CHECK(q.variance == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("a balanced splitter mixes coherent amplitudes") {
  GaussianState s = gaussian::vacuum(2);
  const complex<double> a0(0.3, 0.0);
  const complex<double> a1(0.0, 0.5);
  s = gaussian::displace(s, 0, a0);
  s = gaussian::displace(s, 1, a1);
  Eigen::MatrixXcd u(2, 2);
  const double isq = 1.0 / std::sqrt(2.0);
  u << isq, isq, isq, -isq;
  s = gaussian::apply_passive(s, u);
  CHECK(std::abs(gaussian::coherent_amplitude(s, 0) - (a0 + a1) * isq) <
        1e-13);
  CHECK(std::abs(gaussian::coherent_amplitude(s, 1) - (a0 - a1) * isq) <
        1e-13);
  CHECK(gaussian::purity_defect(s) < 1e-12);
}

TEST_CASE("apply_passive rejects bad networks") {
  const GaussianState s = gaussian::vacuum(2);
  Eigen::MatrixXcd not_unitary = Eigen::MatrixXcd::Identity(2, 2) * 0.9;
  CHECK_THROWS_AS(gaussian::apply_passive(s, not_unitary),
                  std::invalid_argument);
  Eigen::MatrixXcd wrong_size = Eigen::MatrixXcd::Identity(3, 3);
  CHECK_THROWS_AS(gaussian::apply_passive(s, wrong_size),
                  std::invalid_argument);
}

TEST_CASE("mode indices are range checked") {
  const GaussianState s = gaussian::vacuum(2);
  CHECK_THROWS_AS(gaussian::photon_mean(s, 5), std::out_of_range);
  CHECK_THROWS_AS(gaussian::photon_mean(s, -1), std::out_of_range);
  CHECK_THROWS_AS(gaussian::squeeze(s, 2, 0.5, 0.0), std::out_of_range);
}

TEST_CASE("reduced mode of a two-mode squeezed state is thermal") {
  // Two single-mode squeezers with opposite phases plus a balanced splitter
  // make a two-mode squeezed vacuum; each marginal is then thermal with
  // n = sinh(r)^2 and photon variance n(n+1).
  const double r = 0.8;
  GaussianState s = gaussian::vacuum(2);
  s = gaussian::squeeze(s, 0, r, 0.0);
  s = gaussian::squeeze(s, 1, r, kPi);
  Eigen::MatrixXcd u(2, 2);
  const double isq = 1.0 / std::sqrt(2.0);
  u << isq, isq, isq, -isq;
  s = gaussian::apply_passive(s, u);
  const double n = std::sinh(r) * std::sinh(r);
  CHECK(gaussian::photon_mean(s, 0) == doctest::Approx(n).epsilon(1e-11));
  CHECK(gaussian::photon_variance(s, 0) ==
        doctest::Approx(n * (n + 1.0)).epsilon(1e-11));
  // The joint state stays pure even though each marginal is mixed.
  CHECK(gaussian::purity_defect(s) < 1e-11);
}

TEST_CASE("squeezed coherent state photon moments") {
  // Displace along the axis that beta = 0 squeezing amplifies.
  const double alpha = 2.0;
  const double r = 0.5;
  GaussianState s = gaussian::displace(gaussian::vacuum(1), 0, alpha);
  s = gaussian::squeeze(s, 0, r, 0.0);
  const double sh = std::sinh(r);
  const double want_mean = alpha * alpha * std::exp(2.0 * r) + sh * sh;
  CHECK(gaussian::photon_mean(s, 0) ==
        doctest::Approx(want_mean).epsilon(1e-12));
  const double want_var = 0.5 * std::sinh(2.0 * r) * std::sinh(2.0 * r) +
                          alpha * alpha * std::exp(4.0 * r);
  CHECK(gaussian::photon_variance(s, 0) ==
        doctest::Approx(want_var).epsilon(1e-11));
}

TEST_CASE("apply dispatches every element kind") {
  GaussianState s = gaussian::vacuum(2);
  s = gaussian::apply(s, DisplaceOp{0, complex<double>(0.3, 0.1)});
  GaussianState direct =
      gaussian::displace(gaussian::vacuum(2), 0, complex<double>(0.3, 0.1));
  CHECK((s.mean() - direct.mean()).cwiseAbs().maxCoeff() < 1e-15);

  s = gaussian::apply(s, SqueezeOp{1, 0.9, 0.2, false});
  direct = gaussian::squeeze(direct, 1, 0.9, 0.2);
  CHECK((s.cov() - direct.cov()).cwiseAbs().maxCoeff() < 1e-15);

  s = gaussian::apply(s, SqueezeOp{1, 0.9, 0.2, true});
  direct = gaussian::squeeze_inverse(direct, 1, 0.9, 0.2);
  CHECK((s.cov() - direct.cov()).cwiseAbs().maxCoeff() < 1e-13);

  s = gaussian::apply(s, RotateOp{0, 0.4});
  direct = gaussian::rotate(direct, 0, 0.4);
  CHECK((s.mean() - direct.mean()).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::MatrixXcd u(2, 2);
  const double isq = 1.0 / std::sqrt(2.0);
  u << isq, isq, isq, -isq;
  s = gaussian::apply(s, PassiveOp{u});
  direct = gaussian::apply_passive(direct, u);
  CHECK((s.mean() - direct.mean()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((s.cov() - direct.cov()).cwiseAbs().maxCoeff() < 1e-14);
}
