#pragma once

// Double-entrance-slit configuration: the perturbative field becomes a
// sum of four forward/backward leg pairings sharing one curvature
// alpha_chi, and the pattern P2b(s2) follows from their closed-form
// x-integrals at any pin plane.

#include <array>
#include <utility>
#include <vector>

#include "spindle/perturb.hpp"

namespace spindle {

struct CompositeKernel {
  struct Term {
    cplx log_weight{};  // offset of ln(phi_b^b psi^f), 1/sqrt(2) per leg included
    cplx x_c{};         // m
  };
  cplx alpha_chi{};     // shared curvature, 1/m^2
  std::array<Term, 4> terms{};
  double z = 0.0;       // m
  double p2b = 0.0;     // (1/2) int field dx, z-independent
};

// Build the four phi_b(+/-) psi(+/-) pairings at pin plane z.
CompositeKernel double_slit_kernel(const ExperimentSetup& setup, double z,
                                   double edge_eps = kKernelEdgeEps);

// dP2b/dchi(x, z) of the composite kernel; real by c.c. pairing.
double field(const CompositeKernel& kernel, double x);

// P2b(s2) over a grid of exit-slit centers, via the closed-form Gaussian
// integral of each of the four terms.  Independent of kernel_z.
std::vector<std::pair<double, double>> pattern(const ExperimentSetup& setup,
                                               const std::vector<double>& s2_grid,
                                               double kernel_z);

}  // namespace spindle
