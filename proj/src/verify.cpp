#include "su11net/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>

#include "su11net/circuit.hpp"
#include "su11net/gaussian.hpp"
#include "su11net/metrology.hpp"

namespace su11net::verify {

namespace {

using circuit::Backend;
using circuit::DistributorKind;
using circuit::Pipeline;
using circuit::Scheme;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Checker {
  std::vector<std::string> notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void expect_abs(double got, double want, double tol,
                  const std::string& what) {
    const double err = std::abs(got - want);
    expect(err <= tol, what + ": got " + fmt(got) + ", want " + fmt(want) +
                           " (|err| " + fmt(err) + " > " + fmt(tol) + ")");
  }
  void expect_rel(double got, double want, double tol,
                  const std::string& what) {
    const double err = std::abs(got - want) / std::abs(want);
    expect(err <= tol, what + ": got " + fmt(got) + ", want " + fmt(want) +
                           " (rel err " + fmt(err) + " > " + fmt(tol) + ")");
  }
};

Pipeline pipeline(Scheme scheme, int modes, double r,
                  const std::vector<double>& encoding,
                  DistributorKind dist = DistributorKind::kDft,
                  double alpha_seed = 0.0) {
  return circuit::make_pipeline(scheme, modes, r, std::nullopt, dist, encoding,
                                alpha_seed);
}

double bound_for(Scheme scheme, int modes, double r, double alpha = 0.0) {
  const auto qfi = metrology::qfi_closed_form(
      scheme, modes, r,
      scheme == Scheme::kNetworkPhaseHomodyne ? std::optional<double>(alpha)
                                              : std::nullopt);
  return metrology::qcrb_from_qfi(qfi).value;
}

// ---- criterion 1: single-mode displacement saturation ---------------------

void criterion_single_displacement(Checker& c) {
  for (double r : {0.0, 0.5, 1.0, 1.5}) {
    const Pipeline p = pipeline(Scheme::kSingleDisplacement, 1, r, {0.1});
    const auto sens =
        metrology::error_sensitivity(p, 0.1, 0.0, Backend::gaussian());
    const double want = 0.5 * std::exp(-r);
    c.expect_rel(sens.delta, want, 1e-6,
                 "displacement sensitivity, r = " + fmt(r));
    const double bound = bound_for(Scheme::kSingleDisplacement, 1, r);
    c.expect_rel(sens.delta, bound, 1e-6,
                 "displacement bound saturation, r = " + fmt(r));
  }
}

// ---- criterion 2: single-mode phase saturation -----------------------------

void criterion_single_phase(Checker& c) {
  for (double r : {0.5, 1.0, 1.5}) {
    const Pipeline p = pipeline(Scheme::kSinglePhase, 1, r, {1e-4});
    const auto sens =
        metrology::error_sensitivity(p, 1e-4, 0.0, Backend::gaussian());
    const double want = 1.0 / (2.0 * std::sqrt(2.0) * std::sinh(r) *
                               std::cosh(r));
    c.expect_rel(sens.delta, want, 5e-3, "phase sensitivity, r = " + fmt(r));
  }
  // Photon signal at a finite angle against the closed form
  // 4 sin^2(phi) cosh^2(r) sinh^2(r).
  const Pipeline p = pipeline(Scheme::kSinglePhase, 1, 1.0, {0.01});
  const auto stats = metrology::signal_stats(p, 0, Backend::gaussian());
  c.expect_abs(stats.mean, 0.0013153677953307206, 1e-8,
               "phase signal at phi = 0.01, r = 1");
}

// ---- criterion 3: displacement network -------------------------------------

void criterion_displacement_network(Checker& c) {
  std::mt19937 rng(20250819u);
  std::uniform_real_distribution<double> dist(-0.2, 0.2);
  for (int modes : {2, 4, 8}) {
    std::vector<double> alphas(modes);
    for (double& a : alphas) a = dist(rng);
    for (double r : {0.5, 1.0}) {
      const Pipeline p =
          pipeline(Scheme::kNetworkDisplacement, modes, r, alphas);
      const auto sens =
          metrology::error_sensitivity(p, 0.1, 0.0, Backend::gaussian());
      const double want =
          1.0 / (2.0 * std::sqrt(double(modes)) * std::exp(r));
      c.expect_rel(sens.delta, want, 1e-6,
                   "network displacement sensitivity, M = " +
                       std::to_string(modes) + ", r = " + fmt(r));
    }

    // Port-1 signal depends on the node values only through their average.
    const Pipeline p = pipeline(Scheme::kNetworkDisplacement, modes, 0.5,
                                alphas);
    std::vector<double> permuted = alphas;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    std::swap(permuted.front(), permuted.back());
    const double s0 =
        metrology::signal_stats(p, 0, Backend::gaussian()).mean;
    const double s1 =
        metrology::signal_stats(circuit::with_encoding(p, permuted), 0,
                                Backend::gaussian())
            .mean;
    c.expect_abs(s1, s0, 1e-10,
                 "port-1 signal under node permutation, M = " +
                     std::to_string(modes));

    // The ports away from the readout carry the image of the node vector
    // under the distributor: amplitude_l = sum_j U_jl alpha_j.  A real
    // distributor (Hadamard) realizes that literally; the complex DFT
    // realizes its conjugate with identical magnitudes.
    for (DistributorKind kind :
         {DistributorKind::kHadamard, DistributorKind::kDft}) {
      const Pipeline q =
          pipeline(Scheme::kNetworkDisplacement, modes, 0.5, alphas, kind);
      const gaussian::GaussianState out = circuit::run_gaussian(q);
      const Eigen::MatrixXcd u = circuit::distributor_matrix(kind, modes);
      for (int l = 1; l < modes; ++l) {
        std::complex<double> image(0.0, 0.0);
        for (int j = 0; j < modes; ++j) image += u(j, l) * alphas[j];
        const std::complex<double> amp = gaussian::coherent_amplitude(out, l);
        const std::string tag = std::string(circuit::distributor_id(kind)) +
                                ", M = " + std::to_string(modes) +
                                ", port " + std::to_string(l + 1);
        if (kind == DistributorKind::kHadamard)
          c.expect_abs(std::abs(amp - image), 0.0, 1e-10,
                       "port amplitude image, " + tag);
        else
          c.expect_abs(std::abs(amp - std::conj(image)), 0.0, 1e-10,
                       "port amplitude image (conjugate pairing), " + tag);
        c.expect_abs(std::abs(amp), std::abs(image), 1e-10,
                     "port amplitude magnitude, " + tag);
      }
    }
  }
}

// ---- criterion 4: phase network ---------------------------------------------

void criterion_phase_network(Checker& c) {
  for (int modes : {2, 4}) {
    for (double r : {1.0, 1.5}) {
      const Pipeline p = pipeline(Scheme::kNetworkPhase, modes, r,
                                  std::vector<double>(modes, 1e-4));
      const auto sens =
          metrology::error_sensitivity(p, 1e-4, 0.0, Backend::gaussian());
      const double bound = bound_for(Scheme::kNetworkPhase, modes, r);
      c.expect_rel(sens.delta, bound, 5e-3,
                   "network phase sensitivity, M = " + std::to_string(modes) +
                       ", r = " + fmt(r));
    }
  }

  // Below r ~ 1 the measured sensitivity sits above the bound.  At a probe
  // angle of 0.01 the homogeneous excess sqrt(1+S)/cos(phi) - 1 ~ 7e-5 is
  // well clear of differentiation noise; an inhomogeneous network adds the
  // node-spread term Phi sinh^2 r to the signal background and misses the
  // bound by a factor of a few.
  {
    const double r = 0.3;
    const double bound = bound_for(Scheme::kNetworkPhase, 2, r);
    const Pipeline hom = pipeline(Scheme::kNetworkPhase, 2, r,
                                  std::vector<double>(2, 0.01));
    const double ratio_hom =
        metrology::error_sensitivity(hom, 0.01, 0.0, Backend::gaussian())
            .delta /
        bound;
    c.expect(ratio_hom > 1.0 + 2e-5,
             "homogeneous r = 0.3 sits above the bound: ratio " +
                 fmt(ratio_hom));
    const Pipeline inhom = pipeline(Scheme::kNetworkPhase, 2, r,
                                    {1e-4 + 1e-3, 1e-4 - 1e-3});
    const double ratio_inhom =
        metrology::error_sensitivity(inhom, 1e-4, 0.0, Backend::gaussian())
            .delta /
        bound;
    c.expect(ratio_inhom > 1.5,
             "node-spread r = 0.3 misses the bound clearly: ratio " +
                 fmt(ratio_inhom));
  }

  // Pure node-spread signal: phases (h, -h) average to zero and leave the
  // background h^2 sinh^2 r at the readout port.
  {
    const double h = 1e-3;
    const Pipeline p = pipeline(Scheme::kNetworkPhase, 2, 1.0, {h, -h});
    const auto stats = metrology::signal_stats(p, 0, Backend::gaussian());
    const double want = h * h * 1.3810978455418155;  // sinh^2(1)
    c.expect_rel(stats.mean, want, 0.02, "node-spread background signal");
  }
}

// ---- criterion 5: homodyne readout ------------------------------------------

void criterion_homodyne(Checker& c) {
  const Pipeline p =
      pipeline(Scheme::kNetworkPhaseHomodyne, 4, 1.0,
               std::vector<double>(4, 1e-4), DistributorKind::kDft, 10.0);
  const auto sens =
      metrology::homodyne_sensitivity(p, 1e-4, 0.0, Backend::gaussian());
  c.expect_rel(sens.delta, 0.0067667641618306351, 5e-3,
               "homodyne sensitivity e^{-2r}/(2 alpha)");
  const double bound = bound_for(Scheme::kNetworkPhaseHomodyne, 4, 1.0, 10.0);
  c.expect_abs(sens.delta / bound, 1.0, 0.01,
               "homodyne saturation of the squeezed-coherent bound");
}

// ---- criterion 6: Fisher-information oracle agreement -----------------------

void criterion_qfi(Checker& c) {
  // The guard is opened to 1e-4: the deepest case (phase network at r = 1,
  // cutoff 40) parks its top-level weight near 7e-6, and the agreement
  // checks below are the real accuracy gate: the truncation bias they admit
  // was measured at 2.2e-4 relative for that case, well inside the 1e-3
  // oracle tolerance.
  const double guard = 1e-4;
  struct Case {
    Scheme scheme;
    int modes;
    double r;
    double alpha;
    int cutoff;
    double eta0;
    double want;
    const char* tag;
  };
  const Case cases[] = {
      {Scheme::kNetworkDisplacement, 2, 0.5, 0.0, 25, 0.1,
       21.746254627672361, "displacement network, M = 2, r = 0.5"},
      {Scheme::kSinglePhase, 1, 1.0, 0.0, 60, 1e-4, 26.308232836016483,
       "single-mode phase, r = 1"},
      {Scheme::kNetworkPhase, 2, 1.0, 0.0, 40, 1e-4, 26.308232836016483,
       "phase network, M = 2, r = 1"},
      {Scheme::kNetworkPhaseHomodyne, 1, 0.5, 2.0, 60, 1e-4,
       120.98709327397403, "squeezed-coherent phase, r = 0.5, alpha = 2"},
  };
  for (const Case& k : cases) {
    const Pipeline p =
        pipeline(k.scheme, k.modes, k.r,
                 std::vector<double>(k.modes, k.eta0), DistributorKind::kDft,
                 k.alpha);
    const auto family = circuit::fock_encoding_family(p, k.cutoff, guard);
    const auto qfi = fock::qfi_numeric(family, k.eta0, 1e-3);
    c.expect_rel(qfi.value, k.want, 1e-3, std::string("QFI, ") + k.tag);
    c.expect(qfi.converged,
             std::string("QFI step convergence, ") + k.tag + ": coarse " +
                 fmt(qfi.coarse) + " vs fine " + fmt(qfi.fine));
  }
}

// ---- criterion 7: property suites -------------------------------------------

void property_purity(Checker& c) {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Scheme schemes[] = {Scheme::kSingleDisplacement, Scheme::kSinglePhase,
                            Scheme::kNetworkDisplacement,
                            Scheme::kNetworkPhase,
                            Scheme::kNetworkPhaseHomodyne};
  for (int trial = 0; trial < 40; ++trial) {
    const Scheme scheme = schemes[trial % 5];
    const int modes =
        circuit::is_single_scheme(scheme) ? 1 : 1 + int(unit(rng) * 4.0);
    const double r = 1.5 * unit(rng);
    const double beta = 2.0 * M_PI * unit(rng);
    std::vector<double> enc(modes);
    for (double& e : enc) e = 0.6 * unit(rng) - 0.3;
    const double alpha =
        scheme == Scheme::kNetworkPhaseHomodyne ? 2.0 * unit(rng) + 0.1 : 0.0;
    const Pipeline p = circuit::make_pipeline(
        scheme, modes, r, beta, DistributorKind::kDft, enc, alpha);
    const auto out = circuit::run_gaussian(p);
    c.expect(gaussian::purity_defect(out) <= 1e-9,
             "purity defect " + fmt(gaussian::purity_defect(out)) +
                 " on trial " + std::to_string(trial));
    c.expect(gaussian::uncertainty_floor(out) >= -1e-9,
             "uncertainty floor " + fmt(gaussian::uncertainty_floor(out)) +
                 " on trial " + std::to_string(trial));
  }
}

void property_symplectic(Checker& c) {
  const int modes = 3;
  const std::vector<Element> elements = {
      SqueezeOp{0, 0.7, 1.1, false},
      SqueezeOp{1, 0.9, 0.4, true},
      RotateOp{2, 0.9},
      PassiveOp{circuit::distributor_matrix(DistributorKind::kDft, modes)},
  };
  const char* names[] = {"squeeze", "inverse squeeze", "rotation",
                         "distributor"};
  int idx = 0;
  for (const Element& e : elements) {
    // Reconstruct the linear action on the quadrature means column by
    // column; these elements have no displacement part.
    Eigen::MatrixXd s(2 * modes, 2 * modes);
    for (int k = 0; k < 2 * modes; ++k) {
      gaussian::GaussianState probe = gaussian::vacuum(modes);
      probe.mutable_mean()(k) = 1.0;
      s.col(k) = gaussian::apply(probe, e).mean();
    }
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
    omega.topRightCorner(modes, modes).setIdentity();
    omega.bottomLeftCorner(modes, modes) =
        -Eigen::MatrixXd::Identity(modes, modes);
    const double defect =
        (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
    c.expect(defect <= 1e-10, std::string("symplectic form defect ") +
                                  fmt(defect) + " for " + names[idx]);
    ++idx;
  }
}

void property_time_reversal(Checker& c) {
  for (int modes : {1, 3, 4}) {
    const Pipeline p =
        pipeline(Scheme::kNetworkPhase, modes, 1.3,
                 std::vector<double>(modes, 0.0),
                 modes == 4 ? DistributorKind::kHadamard
                            : DistributorKind::kDft);
    const auto out = circuit::run_gaussian(p);
    const double mean_defect = out.mean().cwiseAbs().maxCoeff();
    const double cov_defect =
        (out.cov() -
         0.5 * Eigen::MatrixXd::Identity(2 * modes, 2 * modes))
            .cwiseAbs()
            .maxCoeff();
    c.expect(mean_defect <= 1e-10 && cov_defect <= 1e-10,
             "time reversal at M = " + std::to_string(modes) +
                 ": mean defect " + fmt(mean_defect) + ", cov defect " +
                 fmt(cov_defect));
  }
}

void property_backend_agreement(Checker& c) {
  // Photon moments, single mode, finite angle.
  {
    const Pipeline p = pipeline(Scheme::kSinglePhase, 1, 0.8, {0.05});
    const auto g = circuit::run_gaussian(p);
    const auto f = circuit::run_fock(p, 60, 1e-8);
    const double w = fock::truncation_weight(f);
    const auto [fm, fv] = fock::photon_moments(f, 0);
    c.expect_abs(fm, gaussian::photon_mean(g, 0), 1e-8 + w,
                 "backend photon mean, single-mode phase");
    c.expect_abs(fv, gaussian::photon_variance(g, 0), 1e-8 + w,
                 "backend photon variance, single-mode phase");
  }
  // Coherent amplitudes, two-mode displacement network.
  {
    const Pipeline p =
        pipeline(Scheme::kNetworkDisplacement, 2, 0.6, {0.12, -0.05});
    const auto g = circuit::run_gaussian(p);
    const auto f = circuit::run_fock(p, 36, 1e-7);
    const double w = fock::truncation_weight(f);
    for (int m = 0; m < 2; ++m) {
      const auto ga = gaussian::coherent_amplitude(g, m);
      const auto fa = fock::lowering_expectation(f, m);
      c.expect_abs(std::abs(ga - fa), 0.0, 1e-8 + w,
                   "backend coherent amplitude, mode " + std::to_string(m));
    }
    const auto [fm, fv] = fock::photon_moments(f, 0);
    c.expect_abs(fm, gaussian::photon_mean(g, 0), 1e-8 + w,
                 "backend photon mean, displacement network");
    c.expect_abs(fv, gaussian::photon_variance(g, 0), 1e-8 + w,
                 "backend photon variance, displacement network");
  }
  // Quadrature moments, homodyne pipeline.
  {
    const Pipeline p =
        pipeline(Scheme::kNetworkPhaseHomodyne, 2, 0.5, {2e-3, 1e-3},
                 DistributorKind::kDft, 0.8);
    const auto g = circuit::run_gaussian(p);
    const auto q = gaussian::quadrature_stats(g, 0);
    const auto f = circuit::run_fock(p, 36, 1e-7);
    const double w = fock::truncation_weight(f);
    const double n = fock::photon_moments(f, 0).first;
    const auto a1 = fock::lowering_expectation(f, 0);
    const auto a2 = fock::lowering_squared_expectation(f, 0);
    const double mean = a1.imag();
    const double var =
        0.25 * (2.0 * n + 1.0 - 2.0 * a2.real()) - mean * mean;
    c.expect_abs(mean, q.mean, 1e-8 + w, "backend quadrature mean");
    c.expect_abs(var, q.variance, 1e-8 + w, "backend quadrature variance");
  }
  // Inverting the preparation returns the truncated state to vacuum.
  {
    const Pipeline p = pipeline(Scheme::kNetworkPhase, 2, 0.3,
                                std::vector<double>(2, 0.0));
    const auto f = circuit::run_fock(p, 20, 1e-8);
    const auto vac = fock::vacuum(2, 20);
    const double w = fock::truncation_weight(f);
    c.expect_abs(std::abs(fock::overlap(vac, f)), 1.0, 1e-8 + w,
                 "fock round trip back to vacuum");
  }
}

void property_bogoliubov(Checker& c) {
  // The output mode is B a + A a^dag with |B|^2 - |A|^2 = 1; in moments,
  // Var(n)/(2 <n>) - <n> recovers |B|^2 - |A|^2 exactly.
  for (double phi : {0.01, 0.3, 1.0}) {
    const Pipeline p = pipeline(Scheme::kSinglePhase, 1, 1.0, {phi});
    const auto g = circuit::run_gaussian(p);
    const double n = gaussian::photon_mean(g, 0);
    const double v = gaussian::photon_variance(g, 0);
    c.expect_abs(v / (2.0 * n) - n, 1.0, 1e-10,
                 "Bogoliubov normalization at phi = " + fmt(phi));
  }
}

void property_distributor_invariance(Checker& c) {
  for (int modes : {4, 8}) {
    for (Scheme scheme :
         {Scheme::kNetworkDisplacement, Scheme::kNetworkPhase}) {
      const double eta =
          scheme == Scheme::kNetworkDisplacement ? 0.1 : 1e-3;
      const Pipeline dft = pipeline(scheme, modes, 1.0,
                                    std::vector<double>(modes, eta),
                                    DistributorKind::kDft);
      const Pipeline had = pipeline(scheme, modes, 1.0,
                                    std::vector<double>(modes, eta),
                                    DistributorKind::kHadamard);
      const double sd = metrology::signal_stats(dft, 0, Backend::gaussian()).mean;
      const double sh = metrology::signal_stats(had, 0, Backend::gaussian()).mean;
      c.expect_abs(sd, sh, 1e-10,
                   std::string("signal distributor invariance, ") +
                       circuit::scheme_id(scheme) + ", M = " +
                       std::to_string(modes));
    }
  }
  // The closed-form information never sees the distributor; at cutoff 5 the
  // truncated estimate is visibly biased (top-level weight near 4e-3, hence
  // the wide guard), but the bias is shared between the two distributor
  // kinds and cancels in the comparison.  (M = 2 would be vacuous: both
  // kinds give the same matrix there.)
  {
    const int modes = 4, cutoff = 5;
    const double r = 0.3, eta0 = 0.05;
    double values[2];
    int idx = 0;
    for (DistributorKind kind :
         {DistributorKind::kDft, DistributorKind::kHadamard}) {
      const Pipeline p = pipeline(Scheme::kNetworkDisplacement, modes, r,
                                  std::vector<double>(modes, eta0), kind);
      const auto family = circuit::fock_encoding_family(p, cutoff, 1e-2);
      values[idx++] = fock::qfi_numeric(family, eta0, 1e-3).value;
    }
    c.expect_rel(values[1], values[0], 2e-3,
                 "numeric QFI distributor invariance, M = 4");
  }
}

void property_fluctuation_law(Checker& c) {
  for (int modes : {1, 2, 4}) {
    const Scheme scheme =
        modes == 1 ? Scheme::kSinglePhase : Scheme::kNetworkPhase;
    const Pipeline p = pipeline(scheme, modes, 1.0,
                                std::vector<double>(modes, 1e-4));
    const auto stats = metrology::signal_stats(p, 0, Backend::gaussian());
    const double ratio = stats.std_dev * stats.std_dev / stats.mean;
    c.expect_abs(ratio, 2.0, 0.02,
                 "(dS)^2/S in the small-angle limit, M = " +
                     std::to_string(modes));
  }
}

void criterion_properties(Checker& c) {
  property_purity(c);
  property_symplectic(c);
  property_time_reversal(c);
  property_backend_agreement(c);
  property_bogoliubov(c);
  property_distributor_invariance(c);
  property_fluctuation_law(c);
}

CriterionResult run_one(int id, const std::string& name, double budget_s,
                        const std::function<void(Checker&)>& body) {
  CriterionResult result;
  result.id = id;
  result.name = name;
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("unexpected error: ") + e.what());
  }
  const auto t1 = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(t1 - t0).count();
  if (budget_s > 0.0 && result.seconds > budget_s) {
    c.ok = false;
    c.notes.push_back("runtime " + fmt(result.seconds) + " s over the " +
                      fmt(budget_s) + " s budget");
  }
  result.passed = c.ok;
  result.notes = std::move(c.notes);
  return result;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "single-mode displacement saturation", 1.0,
                            criterion_single_displacement));
  results.push_back(
      run_one(2, "single-mode phase saturation", 1.0, criterion_single_phase));
  results.push_back(run_one(3, "displacement network", 2.0,
                            criterion_displacement_network));
  results.push_back(run_one(4, "phase network", 2.0, criterion_phase_network));
  results.push_back(run_one(5, "homodyne readout", 1.0, criterion_homodyne));
  results.push_back(
      run_one(6, "Fisher-information oracle agreement", 60.0, criterion_qfi));
  results.push_back(run_one(7, "property suites", 0.0, criterion_properties));
  return results;
}

int report(std::ostream& out) {
  int failures = 0;
  for (const CriterionResult& r : run_all()) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%.2f s)",
                  r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    out << line << "\n";
    if (!r.passed) {
      ++failures;
      for (const std::string& note : r.notes) out << "    " << note << "\n";
    }
  }
  return failures;
}

}  // namespace su11net::verify
