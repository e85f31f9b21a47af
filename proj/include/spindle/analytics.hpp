#pragma once

// Derived observables of the spindle field: stationary-phase centroid,
// fringe scale, envelope peak and width, their small-slit limits, the
// envelope-maximum cubic, and the counting-statistics error budget.

#include "spindle/perturb.hpp"

namespace spindle {

struct DegeneratePhase : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoRootInUnitInterval : std::domain_error {
  using std::domain_error::domain_error;
};

struct SpindleAnalytics {
  double x_c0 = 0.0;     // m, stationary-phase centroid
  double x_pi = 0.0;     // m, first pi-phase offset sqrt(pi/|Im alpha_chi|)
  double x_max = 0.0;    // m, envelope peak
  double sigma_w = 0.0;  // m, envelope width sqrt(-1/(2 Re alpha_chi))
  double z = 0.0;        // m
  // Fringe orientation: sign of Im alpha_chi (negative between proper
  // slits at xi < 1).
  int phase_sign = 0;
};

SpindleAnalytics spindle_at(const PerturbativeKernel& kernel);

struct SmallSlitLimits {
  cplx alpha_chi{};      // 1/m^2
  double x_pi = 0.0;     // sqrt(lambda L xi (1-xi))
  double sigma_w = 0.0;
  bool in_domain = true; // false when mu ~ 1 or xi within ~mu of 0 or 1
};

SmallSlitLimits small_slit_limits(const ScaledParams& params, double sigma1,
                                  double lambda, double length);

struct EnvelopeRoot {
  double xi = 0.0;
  bool degenerate = false;  // rho ~ 0: triple root at the exit boundary
};

// Unique root in (0,1) of rho xi^3 + 2 xi^3 - 6 xi^2 + 6 xi - 2 = 0,
// by bisection to 1e-12.
EnvelopeRoot max_envelope_position(double rho);

struct CountingPlan {
  long long n_counts = 0;      // recorded detections without the pin
  double pin_width = 0.0;      // m, hard-edge equivalent
  double expected_ratio = 0.0; // |Delta P2b / P2b| at the pin
  double field_variation = 0.0;// 1/m, spread of the field across the pin
  double field_mean = 0.0;     // 1/m, mean field across the pin
};

struct CountingErrors {
  double statistical = 0.0;  // (1/sqrt(n)) / |expected_ratio|
  double systematic = 0.0;   // field_variation / |field_mean|
};

CountingErrors counting_error(const CountingPlan& plan);

}  // namespace spindle
