#pragma once

// The perturbative response of the detection rate to a thin absorber:
//   dP2b/dchi(x,z) = P2b sqrt(-alpha_chi)/sqrt(pi) exp(alpha_chi (x-x_c)^2) + c.c.
// plus the finite-width Gaussian-pin blocking ratio.

#include <vector>

#include "spindle/propagate.hpp"

namespace spindle {

struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

// Thin absorptive pin chi(x) = 1 - exp(-(x-center)^2 / (2 sigma^2)),
// hard-edge equivalent width sqrt(2 pi) sigma.
struct PinSpec {
  double center = 0.0;  // m
  double sigma = 0.0;   // m
  double z = 0.0;       // m, plane of the pin

  double effective_width() const;  // sqrt(2 pi) sigma
};

struct PerturbativeKernel {
  double p2b = 0.0;   // detection probability of the unperturbed setup
  cplx alpha_chi{};   // 1/m^2, Re < 0
  cplx x_c{};         // m, complex center
  double z = 0.0;     // m, pin plane the kernel was built for
};

// Fraction of z stripped off both ends of (0, L); both propagator legs
// must have positive length.
inline constexpr double kKernelEdgeEps = 1e-6;

// Scaled closed form for alpha_chi and x_c (single entrance slit).
PerturbativeKernel kernel_at(const ExperimentSetup& setup, double z,
                             double edge_eps = kKernelEdgeEps);

// The same kernel assembled by running the quadratic-form pipeline:
// phi_b(x) * psi(x) with phi_b the back-propagated conjugate exit wave.
// Independent route used to validate the scaled closed form.
ComplexQuadratic composed_product(const ExperimentSetup& setup, double z);
PerturbativeKernel kernel_from_waves(const ExperimentSetup& setup, double z,
                                     double edge_eps = kKernelEdgeEps);

// dP2b/dchi(x, z); real by c.c. pairing.  Positive where blocking
// decreases the counting rate.
double field(const PerturbativeKernel& kernel, double x);

// max over z_list of |(1/2) int field dx - P2b| / P2b using the closed
// Gaussian integral of the kernel.
double integral_identity_check(const ExperimentSetup& setup,
                               const std::vector<double>& z_list);

// Blocking ratio Delta P2b / P2b of a Gaussian pin centered at
// pin.center; positive when the counting rate increases.  Reduces to
// -field(x) * effective_width / p2b as sigma -> 0.
double pin_blocking(const PerturbativeKernel& kernel, const PinSpec& pin);

}  // namespace spindle
