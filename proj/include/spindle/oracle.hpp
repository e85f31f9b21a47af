#pragma once

// Brute-force verification: adaptive quadrature of the raw propagation
// integrals, finite-difference functional derivatives, and a seeded
// Poisson counting simulator.  Nothing here reuses the closed forms it
// is meant to check.

#include <cstdint>
#include <functional>
#include <vector>

#include "spindle/perturb.hpp"

namespace spindle {

struct NonConvergent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
  double half_width_units = 12.0;  // integration window in local widths
  int max_subdivisions = 4000;
  double rel_tol = 1e-11;
};

struct QuadResult {
  cplx value{};
  double error = 0.0;   // absolute error estimate
  bool converged = true;
};

// Adaptive Gauss-Kronrod 15(7) panels over [a, b].
QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

// Nested propagation of the entrance wave by quadrature: one leg gives
// psi at distance legs[0]; two legs insert mask(x) at the intermediate
// plane.  Every leg is an explicit integral against the free kernel.
QuadResult quad_propagate(const ComplexQuadratic& source,
                          const std::vector<double>& leg_d,
                          const std::function<cplx(double)>& mask_between,
                          double x_eval, const QuadratureSpec& spec = {});

// Detection probability by quadrature: psi_2a built from one explicit
// propagation integral per exit point, then |f2 psi_2a|^2 integrated.
double quad_detection_probability(const ExperimentSetup& setup,
                                  const QuadratureSpec& spec = {});

// Blocking change P2b(no pin) - P2b(pin) evaluated without subtracting
// two large integrals: the pin contributes T(x2) = int G pin psi dx and
// the difference integrand is f2^2 (2 Re(psi_2a* T) - |T|^2).
double quad_blocking_difference(const ExperimentSetup& setup, const PinSpec& pin,
                                const QuadratureSpec& spec = {});

// (P2b(no pin) - P2b(pin, w)) / w for each hard-edge width w, Richardson
// extrapolated in w^2 to the functional derivative at w -> 0.
double fd_functional_derivative(const ExperimentSetup& setup, double z, double x,
                                const std::vector<double>& widths = {2e-6, 1e-6,
                                                                     5e-7, 2.5e-7},
                                const QuadratureSpec& spec = {});

struct CountingResult {
  long long n_with_pin = 0;
  long long n_without_pin = 0;
  double ratio_estimate = 0.0;  // with-pin / without-pin counts
  double rms_error = 0.0;       // sqrt(n)-propagated error of the ratio
  std::uint64_t seed = 0;
};

inline constexpr const char* kGeneratorId = "splitmix64+mt19937_64+ptrs-poisson";

// Paired Poisson draws with means mean_counts and
// mean_counts * (1 + pin_blocking); bit-reproducible for a given seed,
// independent of threading (per-trial derived seeds).
CountingResult simulate_counts(const ExperimentSetup& setup, const PinSpec& pin,
                               double mean_counts, int n_trials, std::uint64_t seed);

// Deterministic Poisson sampler used by simulate_counts (inversion below
// mean 30, Hormann's PTRS transformed rejection above).
long long poisson_draw(double mean, std::uint64_t seed);

}  // namespace spindle
