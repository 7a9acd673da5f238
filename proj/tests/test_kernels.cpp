#include <complex>
#include <random>

#include <doctest.h>

#include "su11net/linalg.hpp"

using su11net::linalg::CMatrix;
using su11net::linalg::cplx;

namespace {

CMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (auto& v : m.data) v = cplx(dist(rng), dist(rng));
  return m;
}

CMatrix anti_hermitian(int n, unsigned seed, double scale) {
  const CMatrix r = random_matrix(n, n, seed);
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * scale * (r(i, j) - std::conj(r(j, i)));
  return a;
}

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd e(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) e(i, j) = m(i, j);
  return e;
}

// Reference exponential of an anti-Hermitian matrix through the Hermitian
// eigendecomposition of -i a.
Eigen::MatrixXcd exp_reference(const CMatrix& a) {
  const Eigen::MatrixXcd h = to_eigen(a) * cplx(0.0, -1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (long k = 0; k < h.rows(); ++k)
    phases(k) = std::polar(1.0, es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

double max_abs_diff(const CMatrix& a, const Eigen::MatrixXcd& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("parallel gemm matches the serial kernel bit for bit") {
  const CMatrix a = random_matrix(67, 45, 1);
  const CMatrix b = random_matrix(45, 53, 2);
  CMatrix serial_out(67, 53);
  CMatrix parallel_out(67, 53);
  su11net::linalg::serial::gemm(a, b, serial_out);
  su11net::linalg::gemm(a, b, parallel_out);
  for (std::size_t k = 0; k < serial_out.data.size(); ++k) {
    REQUIRE(serial_out.data[k].real() == parallel_out.data[k].real());
    REQUIRE(serial_out.data[k].imag() == parallel_out.data[k].imag());
  }
}

TEST_CASE("gemm agrees with a dense reference product") {
  const CMatrix a = random_matrix(31, 22, 3);
  const CMatrix b = random_matrix(22, 17, 4);
  CMatrix out(31, 17);
  su11net::linalg::gemm(a, b, out);
  const Eigen::MatrixXcd want = to_eigen(a) * to_eigen(b);
  CHECK(max_abs_diff(out, want) < 1e-13);
}

TEST_CASE("parallel gemv matches the serial kernel bit for bit") {
  const CMatrix a = random_matrix(64, 80, 5);
  const CMatrix xm = random_matrix(80, 1, 6);
  std::vector<cplx> y1(64), y2(64);
  su11net::linalg::serial::gemv(a, xm.data.data(), y1.data());
  su11net::linalg::gemv(a, xm.data.data(), y2.data());
  for (int i = 0; i < 64; ++i) {
    REQUIRE(y1[i].real() == y2[i].real());
    REQUIRE(y1[i].imag() == y2[i].imag());
  }
}

TEST_CASE("mode-axis application matches serial and a naive loop") {
  const long outer = 6;
  const int dim = 9;
  const long inner = 7;
  const CMatrix op = random_matrix(dim, dim, 7);
  const CMatrix in = random_matrix(int(outer * dim * inner), 1, 8);
  std::vector<cplx> out_serial(outer * dim * inner);
  std::vector<cplx> out_parallel(outer * dim * inner);
  su11net::linalg::serial::apply_mode_matrix(op, in.data.data(),
                                             out_serial.data(), outer, dim,
                                             inner);
  su11net::linalg::apply_mode_matrix(op, in.data.data(), out_parallel.data(),
                                     outer, dim, inner);
  for (std::size_t k = 0; k < out_serial.size(); ++k) {
    REQUIRE(out_serial[k].real() == out_parallel[k].real());
    REQUIRE(out_serial[k].imag() == out_parallel[k].imag());
  }
  for (long o = 0; o < outer; ++o)
    for (int m = 0; m < dim; ++m)
      for (long i = 0; i < inner; ++i) {
        cplx want(0.0, 0.0);
        for (int n = 0; n < dim; ++n)
          want += op(m, n) * in.data[(o * dim + n) * inner + i];
        CHECK(std::abs(out_serial[(o * dim + m) * inner + i] - want) <
              1e-13);
      }
}

TEST_CASE("one_norm is the maximum absolute column sum") {
  CMatrix m(2, 2);
  m(0, 0) = cplx(3.0, 4.0);   // |.| = 5
  m(1, 0) = cplx(0.0, -2.0);  // column 0 sums to 7
  m(0, 1) = cplx(1.0, 0.0);
  m(1, 1) = cplx(0.0, 1.0);  // column 1 sums to 2
  CHECK(su11net::linalg::one_norm(m) == doctest::Approx(7.0));
}

TEST_CASE("expm of zero is the identity") {
  const CMatrix z(12, 12);
  const CMatrix e = su11net::linalg::expm(z);
  CHECK(max_abs_diff(e, Eigen::MatrixXcd::Identity(12, 12)) < 1e-15);
}

TEST_CASE("expm reproduces a closed-form rotation") {
  // exp(i theta sigma_z) = diag(e^{i theta}, e^{-i theta})
  const double theta = 0.7315;
  CMatrix a(2, 2);
  a(0, 0) = cplx(0.0, theta);
  a(1, 1) = cplx(0.0, -theta);
  const CMatrix e = su11net::linalg::expm(a);
  CHECK(std::abs(e(0, 0) - std::polar(1.0, theta)) < 1e-15);
  CHECK(std::abs(e(1, 1) - std::polar(1.0, -theta)) < 1e-15);
  CHECK(std::abs(e(0, 1)) < 1e-15);
  CHECK(std::abs(e(1, 0)) < 1e-15);
}

TEST_CASE("expm matches an eigendecomposition reference") {
  // Small norm: no scaling steps.
  const CMatrix small = anti_hermitian(40, 11, 1.0);
  CHECK(max_abs_diff(su11net::linalg::expm(small), exp_reference(small)) <
        1e-12);
  // Large norm: several squaring steps.
  const CMatrix large = anti_hermitian(40, 12, 30.0);
  CHECK(max_abs_diff(su11net::linalg::expm(large), exp_reference(large)) <
        1e-10);
}

TEST_CASE("expm of an anti-Hermitian generator is unitary") {
  const CMatrix a = anti_hermitian(50, 13, 8.0);
  const CMatrix e = su11net::linalg::expm(a);
  CHECK(su11net::linalg::unitarity_defect(to_eigen(e)) < 1e-12);
}

TEST_CASE("hermitian_generator inverts the matrix phase") {
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd h0(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) h0(i, j) = cplx(dist(rng), dist(rng));
  h0 = Eigen::MatrixXcd(0.3 * (h0 + h0.adjoint()));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h0);
  Eigen::VectorXcd phases(5);
  for (int k = 0; k < 5; ++k)
    phases(k) = std::polar(1.0, es.eigenvalues()(k));
  const Eigen::MatrixXcd u =
      es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

  const Eigen::MatrixXcd h = su11net::linalg::hermitian_generator(u);
  CHECK((h - h0).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_THROWS_AS(su11net::linalg::hermitian_generator(0.9 * u),
                  std::invalid_argument);
}
