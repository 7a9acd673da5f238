#include "su11net/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11net::linalg {

namespace {

using RowMat =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// y[0..n) += a * x[0..n).  Written against the interleaved re/im layout so
// the compiler vectorizes the complex multiply-add.
inline void axpy_row(cplx a, const cplx* x, cplx* y, long n) {
  const double ar = a.real();
  const double ai = a.imag();
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  for (long j = 0; j < n; ++j) {
    const double xr = xp[2 * j];
    const double xi = xp[2 * j + 1];
    yp[2 * j] += ar * xr - ai * xi;
    yp[2 * j + 1] += ar * xi + ai * xr;
  }
}

inline void gemm_row(const CMatrix& a, const CMatrix& b, CMatrix& out, int i) {
  cplx* row_out = &out.data[static_cast<std::size_t>(i) * b.cols];
  std::fill(row_out, row_out + b.cols, cplx(0.0));
  for (int k = 0; k < a.cols; ++k) {
    const cplx aik = a(i, k);
    if (aik == cplx(0.0)) continue;
    axpy_row(aik, &b.data[static_cast<std::size_t>(k) * b.cols], row_out,
             b.cols);
  }
}

inline cplx dot_row(const CMatrix& a, int i, const cplx* x) {
  const cplx* row = &a.data[static_cast<std::size_t>(i) * a.cols];
  double sr = 0.0;
  double si = 0.0;
  for (int k = 0; k < a.cols; ++k) {
    const double ar = row[k].real();
    const double ai = row[k].imag();
    const double xr = x[k].real();
    const double xi = x[k].imag();
    sr += ar * xr - ai * xi;
    si += ar * xi + ai * xr;
  }
  return {sr, si};
}

inline void mode_slice(const CMatrix& op, const cplx* in, cplx* out, long o,
                       long m, int dim, long inner) {
  const cplx* in_slice = in + o * dim * inner;
  cplx* out_row = out + (o * dim + m) * inner;
  std::fill(out_row, out_row + inner, cplx(0.0));
  for (int n = 0; n < dim; ++n) {
    const cplx c = op(static_cast<int>(m), n);
    if (c == cplx(0.0)) continue;
    axpy_row(c, in_slice + static_cast<long>(n) * inner, out_row, inner);
  }
}

void check_gemm_shapes(const CMatrix& a, const CMatrix& b, const CMatrix& out) {
  if (a.cols != b.rows || out.rows != a.rows || out.cols != b.cols)
    throw std::invalid_argument("gemm: shape mismatch");
}

}  // namespace

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0);
  return m;
}

namespace serial {

void gemm(const CMatrix& a, const CMatrix& b, CMatrix& out) {
  check_gemm_shapes(a, b, out);
  for (int i = 0; i < a.rows; ++i) gemm_row(a, b, out, i);
}

void gemv(const CMatrix& a, const cplx* x, cplx* y) {
  for (int i = 0; i < a.rows; ++i) y[i] = dot_row(a, i, x);
}

void apply_mode_matrix(const CMatrix& op, const cplx* in, cplx* out,
                       long outer, int dim, long inner) {
  for (long o = 0; o < outer; ++o)
    for (long m = 0; m < dim; ++m) mode_slice(op, in, out, o, m, dim, inner);
}

}  // namespace serial

void gemm(const CMatrix& a, const CMatrix& b, CMatrix& out) {
  check_gemm_shapes(a, b, out);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) gemm_row(a, b, out, i);
}

void gemv(const CMatrix& a, const cplx* x, cplx* y) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows; ++i) y[i] = dot_row(a, i, x);
}

void apply_mode_matrix(const CMatrix& op, const cplx* in, cplx* out,
                       long outer, int dim, long inner) {
#pragma omp parallel for schedule(static) collapse(2)
  for (long o = 0; o < outer; ++o)
    for (long m = 0; m < dim; ++m) mode_slice(op, in, out, o, m, dim, inner);
}

double one_norm(const CMatrix& a) {
  std::vector<double> col_sum(a.cols, 0.0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) col_sum[j] += std::abs(a(i, j));
  double best = 0.0;
  for (double s : col_sum) best = std::max(best, s);
  return best;
}

CMatrix expm(const CMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("expm: matrix not square");
  const int n = a.rows;
  // Degree-13 Pade coefficients and the matching 1-norm threshold.
  static const double pc[14] = {64764752532480000.0,
                                32382376266240000.0,
                                7771770303897600.0,
                                1187353796428800.0,
                                129060195264000.0,
                                10559470521600.0,
                                670442572800.0,
                                33522128640.0,
                                1323241920.0,
                                40840800.0,
                                960960.0,
                                16380.0,
                                182.0,
                                1.0};
  const double theta13 = 5.371920351148152;

  const double nrm = one_norm(a);
  int s = 0;
  if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));

  CMatrix as = a;
  if (s > 0) {
    const double scale = std::ldexp(1.0, -s);
    for (auto& v : as.data) v *= scale;
  }

  CMatrix a2(n, n), a4(n, n), a6(n, n);
  gemm(as, as, a2);
  gemm(a2, a2, a4);
  gemm(a2, a4, a6);

  const std::size_t sz = as.data.size();
  auto lincomb = [&](CMatrix& dst, double c6, double c4, double c2,
                     double cid) {
    for (std::size_t t = 0; t < sz; ++t)
      dst.data[t] = c6 * a6.data[t] + c4 * a4.data[t] + c2 * a2.data[t];
    if (cid != 0.0)
      for (int i = 0; i < n; ++i) dst(i, i) += cid;
  };

  CMatrix w(n, n), tmp(n, n), u(n, n), v(n, n);
  // u = as * (a6*(pc13 a6 + pc11 a4 + pc9 a2) + pc7 a6 + pc5 a4 + pc3 a2 + pc1)
  lincomb(w, pc[13], pc[11], pc[9], 0.0);
  gemm(a6, w, tmp);
  for (std::size_t t = 0; t < sz; ++t)
    tmp.data[t] += pc[7] * a6.data[t] + pc[5] * a4.data[t] + pc[3] * a2.data[t];
  for (int i = 0; i < n; ++i) tmp(i, i) += pc[1];
  gemm(as, tmp, u);
  // v = a6*(pc12 a6 + pc10 a4 + pc8 a2) + pc6 a6 + pc4 a4 + pc2 a2 + pc0
  lincomb(w, pc[12], pc[10], pc[8], 0.0);
  gemm(a6, w, v);
  for (std::size_t t = 0; t < sz; ++t)
    v.data[t] += pc[6] * a6.data[t] + pc[4] * a4.data[t] + pc[2] * a2.data[t];
  for (int i = 0; i < n; ++i) v(i, i) += pc[0];

  // Solve (v - u) x = (v + u).
  RowMat lhs(n, n), rhs(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      lhs(i, j) = v(i, j) - u(i, j);
      rhs(i, j) = v(i, j) + u(i, j);
    }
  RowMat x = lhs.partialPivLu().solve(rhs);

  CMatrix result(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) result(i, j) = x(i, j);
  for (int k = 0; k < s; ++k) {
    gemm(result, result, tmp);
    std::swap(result.data, tmp.data);
  }
  return result;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) return 1.0;
  Eigen::MatrixXcd g = u.adjoint() * u;
  g -= Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd hermitian_generator(const Eigen::MatrixXcd& u, double tol) {
  const double defect = unitarity_defect(u);
  if (defect > tol)
    throw std::invalid_argument("matrix is not unitary: defect " +
                                std::to_string(defect));
  // u is normal, so its Schur form is diagonal and the Schur vectors give an
  // orthonormal eigenbasis.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  const Eigen::MatrixXcd& q = schur.matrixU();
  const int n = static_cast<int>(u.rows());
  Eigen::VectorXd phases(n);
  for (int k = 0; k < n; ++k) phases(k) = std::arg(schur.matrixT()(k, k));
  Eigen::MatrixXcd h = q * phases.asDiagonal() * q.adjoint();
  return 0.5 * (h + h.adjoint().eval());
}

}  // namespace su11net::linalg
