#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "su11net/elements.hpp"
#include "su11net/linalg.hpp"

namespace su11net::fock {

// Truncated number-basis state, the brute-force cross-check for the Gaussian
// backend.  Amplitudes are stored row-major with mode 0 slowest:
// index = ((n_0 * cutoff) + n_1) * cutoff + ...  At most four modes are
// supported; beyond that the dense exponential of a passive generator stops
// being tractable.
struct FockState {
  int modes = 0;
  int cutoff = 0;  // levels per mode, occupations 0 .. cutoff-1
  std::vector<linalg::cplx> amps;

  long dim() const { return static_cast<long>(amps.size()); }
};

FockState vacuum(int modes, int cutoff);

double norm_squared(const FockState& s);

// Largest probability any single mode carries in its top two levels; the
// guard quantity for truncation artifacts.
double truncation_weight(const FockState& s);

// Applies one circuit element by exponentiating its truncated generator.
// Every generator stays exactly anti-Hermitian under truncation, so the norm
// is preserved to rounding; states are never renormalized.  Throws
// truncation_overflow when the applied state puts more than `guard` weight
// against the cutoff.
FockState apply_element(const FockState& s, const Element& e,
                        double guard = 1e-10);

FockState run_elements(FockState s, const std::vector<Element>& elements,
                       double guard = 1e-10);

// (mean, variance) of the photon number in one mode.
std::pair<double, double> photon_moments(const FockState& s, int mode);

// <a> and <a^2> for one mode; these feed the quadrature readout cross-checks
// against the Gaussian backend.
linalg::cplx lowering_expectation(const FockState& s, int mode);
linalg::cplx lowering_squared_expectation(const FockState& s, int mode);

linalg::cplx overlap(const FockState& a, const FockState& b);

struct QfiResult {
  double value = 0.0;   // Richardson-extrapolated estimate
  double coarse = 0.0;  // estimate at the requested step
  double fine = 0.0;    // estimate at half the step
  bool converged = true;
};

// Quantum Fisher information of a pure-state family, 4(<d|d> - |<psi|d>|^2)
// with |d> the central-difference derivative at eta0.  `converged` is false
// when halving the step moves the estimate by more than 10%.
QfiResult qfi_numeric(const std::function<FockState(double)>& family,
                      double eta0, double step);

}  // namespace su11net::fock
