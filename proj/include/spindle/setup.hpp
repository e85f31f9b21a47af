#pragma once

// Experiment geometry: Gaussian slit masks, the entrance/exit layout and
// the dimensionless parameters mu, rho, xi everything scales with.

#include <string>
#include <vector>

#include "spindle/quadform.hpp"

namespace spindle {

// Gaussian slit, mask f(x) = exp(-(x-center)^2/(4 sigma^2)).
struct SlitSpec {
  double center = 0.0;  // m
  double sigma = 0.0;   // m, intensity RMS width

  ComplexQuadratic mask() const;
  // Entrance wave: mask with the (1/2 pi sigma^2)^(1/4) prefactor so the
  // transmitted probability is one.
  ComplexQuadratic normalized_wave() const;
};

struct ScaledParams {
  double mu = 0.0;   // sigma1^2 / d1
  double rho = 0.0;  // sigma2^2 / sigma1^2
  double xi = 0.0;   // z / L
};

struct ExperimentSetup {
  double wavelength = 0.0;           // m
  double length = 0.0;               // m, slit-1 to slit-2 distance
  std::vector<SlitSpec> entrance;    // one or two slits
  SlitSpec exit_slit;

  bool single_slit() const { return entrance.size() == 1; }
  bool double_slit() const { return entrance.size() == 2; }

  double d1() const;                 // lambda*L/(4 pi), m^2
  double dparam(double z) const;     // lambda*z/(4 pi), m^2
  ScaledParams scaled(double z) const;

  // Norm of the entrance wave (relevant for two slits, where the
  // 1/sqrt(2) weights leave a residual overlap term).
  double entrance_norm() const;

  // Throws std::invalid_argument on hard errors; appends soft issues
  // (slit overlap, close double-slit spacing) to `warnings` if given.
  void validate(std::vector<std::string>* warnings = nullptr) const;
};

}  // namespace spindle
