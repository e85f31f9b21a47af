#pragma once

// The single-particle pipeline of Fig.-1-style setups: free propagation
// of the entrance wave, exit-slit masking, and the detection probability
// in exact and small-slit closed forms.

#include <utility>
#include <vector>

#include "spindle/setup.hpp"

namespace spindle {

// ln psi(x, z) per entrance slit; two-slit components carry the
// 1/sqrt(2) amplitude in their offsets.  Requires 0 < z.
std::vector<ComplexQuadratic> psi_components(const ExperimentSetup& setup, double z);

// Single-entrance convenience.
ComplexQuadratic psi_at(const ExperimentSetup& setup, double z);

// ln psi_2b = ln(f2 * psi_2a) per entrance slit, at the exit plane z = L.
std::vector<ComplexQuadratic> psi2b_components(const ExperimentSetup& setup);

// RMS width of |psi(x,z)|^2: sqrt((d^2 + sigma1^4)/sigma1^2).
double rms_width_psi(const ExperimentSetup& setup, double z);

// P2b in scaled closed form (single entrance slit):
//   sqrt(rho mu^2 / (mu^2 + rho mu^2 + 1))
//   * exp(-(1/2 sigma1^2) mu^2/(mu^2 + rho mu^2 + 1) (s1 - s2)^2)
double detection_probability(const ExperimentSetup& setup);

// Same quantity evaluated from the psi_2b quadratic instead of the
// scaled parameters:
//   sqrt(pi / -2 Re a2b) exp(-2 |a2b|^2 Im(s2b)^2 / Re a2b + 2 Re c2b)
double detection_probability_from_wave(const ExperimentSetup& setup);

// Small-slit limit (sigma1 sigma2 / d1) exp(-sigma1^2 (s1-s2)^2 / 2 d1^2).
double detection_probability_small_slit(const ExperimentSetup& setup);

// Hard-edge equivalent pattern P2b(s2) ~ |psi_2a(s2)|^2 sqrt(2 pi) sigma2.
std::vector<std::pair<double, double>> hard_edge_pattern(
    const ExperimentSetup& setup, const std::vector<double>& s2_grid);

// True when the hard-edge replacement is justified:
// sqrt(2 pi) sigma2 << RMS width of |psi_2a|^2.
bool hard_edge_valid(const ExperimentSetup& setup);

}  // namespace spindle
