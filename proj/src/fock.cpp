#include "su11net/fock.hpp"

#include <cmath>
#include <complex>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "su11net/errors.hpp"

namespace su11net::fock {

namespace {

using linalg::CMatrix;
using linalg::cplx;

constexpr int kMaxModes = 4;

long ipow(int base, int exp) {
  long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_mode(const FockState& s, int mode) {
  if (mode < 0 || mode >= s.modes)
    throw std::out_of_range("mode " + std::to_string(mode) +
                            " out of range for " + std::to_string(s.modes) +
                            "-mode state");
}

CMatrix displace_generator(int n, cplx alpha) {
  CMatrix g(n, n);
  for (int k = 1; k < n; ++k) {
    const double root = std::sqrt(static_cast<double>(k));
    g(k, k - 1) = alpha * root;              // alpha a^dag
    g(k - 1, k) = -std::conj(alpha) * root;  // -conj(alpha) a
  }
  return g;
}

CMatrix squeeze_generator(int n, double r, double beta, bool inverse) {
  const cplx zeta = std::polar(inverse ? -r : r, beta);
  CMatrix g(n, n);
  for (int k = 2; k < n; ++k) {
    const double root = std::sqrt(static_cast<double>(k) * (k - 1));
    g(k, k - 2) = 0.5 * zeta * root;               // zeta/2 (a^dag)^2
    g(k - 2, k) = -0.5 * std::conj(zeta) * root;   // -conj(zeta)/2 a^2
  }
  return g;
}

FockState apply_single_mode(const FockState& s, int mode, const CMatrix& u) {
  FockState out = s;
  const long outer = ipow(s.cutoff, mode);
  const long inner = ipow(s.cutoff, s.modes - 1 - mode);
  linalg::apply_mode_matrix(u, s.amps.data(), out.amps.data(), outer,
                            s.cutoff, inner);
  return out;
}

// Probability each mode carries in its top two occupation levels.
std::vector<double> top_level_weights(const FockState& s) {
  std::vector<double> w(s.modes, 0.0);
  for (int m = 0; m < s.modes; ++m) {
    const long outer = ipow(s.cutoff, m);
    const long inner = ipow(s.cutoff, s.modes - 1 - m);
    double sum = 0.0;
    for (long o = 0; o < outer; ++o)
      for (int n = s.cutoff - 2; n < s.cutoff; ++n) {
        const cplx* slab = s.amps.data() + (o * s.cutoff + n) * inner;
        for (long i = 0; i < inner; ++i) sum += std::norm(slab[i]);
      }
    w[m] = sum;
  }
  return w;
}

void check_guard(const FockState& s, double guard) {
  const double w = truncation_weight(s);
  if (w > guard) throw truncation_overflow(w, guard);
}

FockState apply_rotate(const FockState& s, int mode, double phi) {
  FockState out = s;
  const long outer = ipow(s.cutoff, mode);
  const long inner = ipow(s.cutoff, s.modes - 1 - mode);
  for (long o = 0; o < outer; ++o)
    for (int n = 0; n < s.cutoff; ++n) {
      const cplx phase = std::polar(1.0, phi * n);
      cplx* slab = out.amps.data() + (o * s.cutoff + n) * inner;
      for (long i = 0; i < inner; ++i) slab[i] *= phase;
    }
  return out;
}

// Dense lift of the one-particle Hermitian h to sum_jk h_jk a_j^dag a_k on
// the truncated basis.  The lift is exactly Hermitian: the (k -> j) and
// (j -> k) couplings share the same sqrt factor.
Eigen::MatrixXcd lifted_hermitian(const Eigen::MatrixXcd& h, int modes,
                                  int cutoff) {
  const long dim = ipow(cutoff, modes);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<int> occ(modes);
  std::vector<long> stride(modes);
  for (int m = 0; m < modes; ++m) stride[m] = ipow(cutoff, modes - 1 - m);
  for (long col = 0; col < dim; ++col) {
    long rem = col;
    for (int m = 0; m < modes; ++m) {
      occ[m] = static_cast<int>(rem / stride[m]);
      rem %= stride[m];
    }
    cplx diag(0.0, 0.0);
    for (int j = 0; j < modes; ++j) diag += h(j, j) * double(occ[j]);
    g(col, col) += diag;
    for (int j = 0; j < modes; ++j)
      for (int k = 0; k < modes; ++k) {
        if (j == k) continue;
        if (occ[k] < 1 || occ[j] > cutoff - 2) continue;
        const long row = col - stride[k] + stride[j];
        const double amp = std::sqrt(double(occ[k]) * double(occ[j] + 1));
        g(row, col) += h(j, k) * amp;
      }
  }
  return g;
}

// exp(i G) for the Hermitian lift G, via eigendecomposition.  This is a few
// times cheaper than a scaling-and-squaring exponential at these dimensions
// and the phase factors keep the result exactly unitary up to rounding.
CMatrix passive_exponential_dense(const Eigen::MatrixXcd& h, int modes,
                                  int cutoff) {
  const Eigen::MatrixXcd g = lifted_hermitian(h, modes, cutoff);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition of the lifted network "
                             "generator failed");
  const long dim = g.rows();
  CMatrix scaled(static_cast<int>(dim), static_cast<int>(dim));
  CMatrix adjoint(static_cast<int>(dim), static_cast<int>(dim));
  for (long c = 0; c < dim; ++c) {
    const cplx phase = std::polar(1.0, es.eigenvalues()(c));
    for (long r = 0; r < dim; ++r) {
      const cplx v = es.eigenvectors()(r, c);
      scaled(static_cast<int>(r), static_cast<int>(c)) = v * phase;
      adjoint(static_cast<int>(c), static_cast<int>(r)) = std::conj(v);
    }
  }
  CMatrix out(static_cast<int>(dim), static_cast<int>(dim));
  linalg::gemm(scaled, adjoint, out);
  return out;
}

// The passive exponential is the expensive step (O(dim^3)) and sensitivity
// sweeps reuse the same distributor many times, so completed exponentials are
// kept in a small process-wide cache.
struct PassiveCacheEntry {
  int modes = 0;
  int cutoff = 0;
  Eigen::MatrixXcd u;
  std::shared_ptr<const CMatrix> exp;
};

std::shared_ptr<const CMatrix> passive_exponential(const Eigen::MatrixXcd& u,
                                                   int modes, int cutoff) {
  static std::mutex mu;
  static std::deque<PassiveCacheEntry> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& e : cache) {
    if (e.modes == modes && e.cutoff == cutoff && e.u.rows() == u.rows() &&
        e.u == u)
      return e.exp;
  }
  const Eigen::MatrixXcd h = linalg::hermitian_generator(u);
  auto exp = std::make_shared<CMatrix>(
      passive_exponential_dense(h, modes, cutoff));
  cache.push_back({modes, cutoff, u, exp});
  if (cache.size() > 8) cache.pop_front();
  return cache.back().exp;
}

FockState apply_passive(const FockState& s, const Eigen::MatrixXcd& u) {
  if (u.rows() != s.modes || u.cols() != s.modes)
    throw std::invalid_argument(
        "passive network is " + std::to_string(u.rows()) + "x" +
        std::to_string(u.cols()) + " but the state has " +
        std::to_string(s.modes) + " modes");
  if ((u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff() < 1e-14)
    return s;
  if (s.modes == 1) {
    const double defect = linalg::unitarity_defect(u);
    if (defect > 1e-10)
      throw std::invalid_argument("passive network is not unitary: defect " +
                                  std::to_string(defect));
    return apply_rotate(s, 0, std::arg(u(0, 0)));
  }
  auto exp = passive_exponential(u, s.modes, s.cutoff);
  FockState out = s;
  linalg::gemv(*exp, s.amps.data(), out.amps.data());
  return out;
}

}  // namespace

FockState vacuum(int modes, int cutoff) {
  if (modes < 1 || modes > kMaxModes)
    throw std::invalid_argument("number-basis backend supports 1 to " +
                                std::to_string(kMaxModes) + " modes, got " +
                                std::to_string(modes));
  if (cutoff < 4)
    throw std::invalid_argument("cutoff must be at least 4, got " +
                                std::to_string(cutoff));
  FockState s;
  s.modes = modes;
  s.cutoff = cutoff;
  s.amps.assign(ipow(cutoff, modes), cplx(0.0));
  s.amps[0] = cplx(1.0);
  return s;
}

double norm_squared(const FockState& s) {
  double sum = 0.0;
  for (const cplx& a : s.amps) sum += std::norm(a);
  return sum;
}

double truncation_weight(const FockState& s) {
  double w = 0.0;
  for (double v : top_level_weights(s)) w = std::max(w, v);
  return w;
}

FockState apply_element(const FockState& s, const Element& e, double guard) {
  FockState out = std::visit(
      [&](const auto& op) -> FockState {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, SqueezeOp>) {
          check_mode(s, op.mode);
          if (op.r < 0.0)
            throw std::invalid_argument("squeeze strength must be nonnegative");
          return apply_single_mode(
              s, op.mode,
              linalg::expm(
                  squeeze_generator(s.cutoff, op.r, op.beta, op.inverse)));
        } else if constexpr (std::is_same_v<T, DisplaceOp>) {
          check_mode(s, op.mode);
          return apply_single_mode(
              s, op.mode, linalg::expm(displace_generator(s.cutoff, op.alpha)));
        } else if constexpr (std::is_same_v<T, RotateOp>) {
          check_mode(s, op.mode);
          return apply_rotate(s, op.mode, op.phi);
        } else {
          return apply_passive(s, op.unitary);
        }
      },
      e);
  // A rotation only changes phases, so the guard cannot newly trip.
  if (!std::holds_alternative<RotateOp>(e)) check_guard(out, guard);
  return out;
}

FockState run_elements(FockState s, const std::vector<Element>& elements,
                       double guard) {
  for (const Element& e : elements) s = apply_element(s, e, guard);
  return s;
}

std::pair<double, double> photon_moments(const FockState& s, int mode) {
  check_mode(s, mode);
  const long outer = ipow(s.cutoff, mode);
  const long inner = ipow(s.cutoff, s.modes - 1 - mode);
  double mean = 0.0;
  double second = 0.0;
  for (long o = 0; o < outer; ++o)
    for (int n = 0; n < s.cutoff; ++n) {
      const cplx* slab = s.amps.data() + (o * s.cutoff + n) * inner;
      double p = 0.0;
      for (long i = 0; i < inner; ++i) p += std::norm(slab[i]);
      mean += p * n;
      second += p * double(n) * double(n);
    }
  return {mean, second - mean * mean};
}

linalg::cplx lowering_expectation(const FockState& s, int mode) {
  check_mode(s, mode);
  const long outer = ipow(s.cutoff, mode);
  const long inner = ipow(s.cutoff, s.modes - 1 - mode);
  cplx acc(0.0);
  for (long o = 0; o < outer; ++o)
    for (int n = 1; n < s.cutoff; ++n) {
      const cplx* hi = s.amps.data() + (o * s.cutoff + n) * inner;
      const cplx* lo = s.amps.data() + (o * s.cutoff + n - 1) * inner;
      const double root = std::sqrt(double(n));
      for (long i = 0; i < inner; ++i) acc += std::conj(lo[i]) * root * hi[i];
    }
  return acc;
}

linalg::cplx lowering_squared_expectation(const FockState& s, int mode) {
  check_mode(s, mode);
  const long outer = ipow(s.cutoff, mode);
  const long inner = ipow(s.cutoff, s.modes - 1 - mode);
  cplx acc(0.0);
  for (long o = 0; o < outer; ++o)
    for (int n = 2; n < s.cutoff; ++n) {
      const cplx* hi = s.amps.data() + (o * s.cutoff + n) * inner;
      const cplx* lo = s.amps.data() + (o * s.cutoff + n - 2) * inner;
      const double root = std::sqrt(double(n) * double(n - 1));
      for (long i = 0; i < inner; ++i) acc += std::conj(lo[i]) * root * hi[i];
    }
  return acc;
}

linalg::cplx overlap(const FockState& a, const FockState& b) {
  if (a.modes != b.modes || a.cutoff != b.cutoff)
    throw std::invalid_argument("overlap between mismatched bases (" +
                                std::to_string(a.modes) + " modes/cutoff " +
                                std::to_string(a.cutoff) + " vs " +
                                std::to_string(b.modes) + "/" +
                                std::to_string(b.cutoff) + ")");
  cplx sum(0.0);
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    sum += std::conj(a.amps[i]) * b.amps[i];
  return sum;
}

QfiResult qfi_numeric(const std::function<FockState(double)>& family,
                      double eta0, double step) {
  if (!(step > 0.0))
    throw std::invalid_argument("qfi step must be positive");
  const FockState base = family(eta0);

  auto estimate = [&](double h) {
    const FockState plus = family(eta0 + h);
    const FockState minus = family(eta0 - h);
    if (plus.amps.size() != base.amps.size() ||
        minus.amps.size() != base.amps.size())
      throw std::invalid_argument("family changed basis between evaluations");
    double dd = 0.0;
    cplx pd(0.0);
    const double inv = 1.0 / (2.0 * h);
    for (std::size_t i = 0; i < base.amps.size(); ++i) {
      const cplx d = (plus.amps[i] - minus.amps[i]) * inv;
      dd += std::norm(d);
      pd += std::conj(base.amps[i]) * d;
    }
    return 4.0 * (dd - std::norm(pd));
  };

  QfiResult r;
  r.coarse = estimate(step);
  r.fine = estimate(0.5 * step);
  r.value = (4.0 * r.fine - r.coarse) / 3.0;
  const double scale = std::max(std::abs(r.fine), 1e-300);
  r.converged = std::abs(r.fine - r.coarse) <= 0.1 * scale;
  return r;
}

}  // namespace su11net::fock
