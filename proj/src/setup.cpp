#include "spindle/setup.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindle {

namespace {
constexpr double kPi = std::numbers::pi;
}

ComplexQuadratic SlitSpec::mask() const {
  return ComplexQuadratic(cplx{-1.0 / (4.0 * sigma * sigma), 0.0}, cplx{center, 0.0},
                          cplx{0.0, 0.0});
}

ComplexQuadratic SlitSpec::normalized_wave() const {
  const double c1 = 0.25 * std::log(1.0 / (2.0 * kPi * sigma * sigma));
  return ComplexQuadratic(cplx{-1.0 / (4.0 * sigma * sigma), 0.0}, cplx{center, 0.0},
                          cplx{c1, 0.0});
}

double ExperimentSetup::d1() const { return wavelength * length / (4.0 * kPi); }

double ExperimentSetup::dparam(double z) const { return wavelength * z / (4.0 * kPi); }

ScaledParams ExperimentSetup::scaled(double z) const {
  const double s1sq = entrance.front().sigma * entrance.front().sigma;
  const double s2sq = exit_slit.sigma * exit_slit.sigma;
  return ScaledParams{s1sq / d1(), s2sq / s1sq, z / length};
}

double ExperimentSetup::entrance_norm() const {
  if (single_slit()) return 1.0;
  const double sg = entrance[0].sigma;
  const double ds = entrance[0].center - entrance[1].center;
  // |(psi+ + psi-)/sqrt(2)|^2 integrates to 1 + overlap of the two
  // unit-norm Gaussians.
  return 1.0 + std::exp(-ds * ds / (8.0 * sg * sg));
}

void ExperimentSetup::validate(std::vector<std::string>* warnings) const {
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
  if (!(length > 0.0)) throw std::invalid_argument("length must be > 0");
  if (entrance.empty() || entrance.size() > 2)
    throw std::invalid_argument("need one or two entrance slits");
  for (const auto& s : entrance)
    if (!(s.sigma > 0.0)) throw std::invalid_argument("entrance sigma must be > 0");
  if (!(exit_slit.sigma > 0.0)) throw std::invalid_argument("exit sigma must be > 0");

  if (double_slit()) {
    if (entrance[0].sigma != entrance[1].sigma)
      throw std::invalid_argument("double slit requires equal entrance sigmas");
    if (warnings) {
      const double sep = std::abs(entrance[0].center - entrance[1].center);
      if (sep < 6.0 * entrance[0].sigma)
        warnings->push_back("entrance slit separation < 6 sigma: normalization degrades");
      if (std::abs(entrance_norm() - 1.0) > 1e-6)
        warnings->push_back("entrance norm deviates from 1 by more than 1e-6");
    }
  }
}

}  // namespace spindle
