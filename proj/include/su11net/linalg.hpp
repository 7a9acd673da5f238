#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace su11net::linalg {

using cplx = std::complex<double>;

// Dense row-major complex matrix used on the number-basis hot path, where the
// matrix exponential of a circuit generator costs O(dim^3) and dominates the
// run time.  Eigen handles the small fixed-size work elsewhere; these buffers
// exist so the cubic kernels can be written as plain loops and parallelized.
struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  CMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  cplx& operator()(int i, int j) {
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  const cplx& operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }

  static CMatrix identity(int n);
};

// Serial reference kernels.  The parallel versions below must produce
// bit-identical results: every output element is accumulated in the same
// order by exactly one thread, so the comparison in the tests is exact.
namespace serial {

// out = a * b
void gemm(const CMatrix& a, const CMatrix& b, CMatrix& out);

// y = a * x, with x of length a.cols and y of length a.rows
void gemv(const CMatrix& a, const cplx* x, cplx* y);

// Treats `in` as a tensor of shape (outer, dim, inner), flattened row-major,
// and applies `op` (dim x dim) along the middle axis:
//   out[o, m, i] = sum_n op(m, n) * in[o, n, i]
void apply_mode_matrix(const CMatrix& op, const cplx* in, cplx* out,
                       long outer, int dim, long inner);

}  // namespace serial

void gemm(const CMatrix& a, const CMatrix& b, CMatrix& out);
void gemv(const CMatrix& a, const cplx* x, cplx* y);
void apply_mode_matrix(const CMatrix& op, const cplx* in, cplx* out,
                       long outer, int dim, long inner);

// Maximum absolute column sum.
double one_norm(const CMatrix& a);

// Matrix exponential by degree-13 Pade approximation with scaling and
// squaring.  Accurate to close to machine precision for the anti-Hermitian
// generators used here.
CMatrix expm(const CMatrix& a);

// Hermitian generator h with u = exp(i h), principal branch (eigenphases in
// (-pi, pi]).  Throws std::invalid_argument when u is not unitary within tol.
Eigen::MatrixXcd hermitian_generator(const Eigen::MatrixXcd& u,
                                     double tol = 1e-10);

// Largest |u^H u - I| entry; used for unitarity validation everywhere a
// distributor matrix enters.
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace su11net::linalg
