#include "spindle/propagate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindle {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2 = 0.34657359027997264;  // ln(2)/2

std::vector<ComplexQuadratic> entrance_waves(const ExperimentSetup& setup) {
  std::vector<ComplexQuadratic> out;
  out.reserve(setup.entrance.size());
  for (const auto& slit : setup.entrance) {
    ComplexQuadratic w = slit.normalized_wave();
    if (setup.double_slit())
      w = ComplexQuadratic(w.alpha(), w.center(), w.offset() - kHalfLog2);
    out.push_back(w);
  }
  return out;
}
}  // namespace

std::vector<ComplexQuadratic> psi_components(const ExperimentSetup& setup, double z) {
  setup.validate();
  if (z <= 0.0) throw DegenerateDistance("psi_components: z <= 0");
  std::vector<ComplexQuadratic> out;
  for (const auto& w : entrance_waves(setup))
    out.push_back(propagate_through(w, setup.dparam(z)));
  return out;
}

ComplexQuadratic psi_at(const ExperimentSetup& setup, double z) {
  if (!setup.single_slit())
    throw std::invalid_argument("psi_at: single entrance slit only");
  return psi_components(setup, z).front();
}

std::vector<ComplexQuadratic> psi2b_components(const ExperimentSetup& setup) {
  std::vector<ComplexQuadratic> out;
  const ComplexQuadratic mask = setup.exit_slit.mask();
  for (const auto& psi : psi_components(setup, setup.length))
    out.push_back(multiply(mask, psi));
  return out;
}

double rms_width_psi(const ExperimentSetup& setup, double z) {
  const double s1sq = setup.entrance.front().sigma * setup.entrance.front().sigma;
  const double d = setup.dparam(z);
  return std::sqrt((d * d + s1sq * s1sq) / s1sq);
}

double detection_probability(const ExperimentSetup& setup) {
  setup.validate();
  if (!setup.single_slit())
    throw std::invalid_argument(
        "detection_probability: single entrance slit only; use the "
        "interference pattern for two slits");
  const ScaledParams p = setup.scaled(setup.length);
  const double m = p.mu * p.mu + p.rho * p.mu * p.mu + 1.0;
  const double s1sq = setup.entrance.front().sigma * setup.entrance.front().sigma;
  const double ds = setup.entrance.front().center - setup.exit_slit.center;
  return std::sqrt(p.rho * p.mu * p.mu / m) *
         std::exp(-(0.5 / s1sq) * (p.mu * p.mu / m) * ds * ds);
}

double detection_probability_from_wave(const ExperimentSetup& setup) {
  if (!setup.single_slit())
    throw std::invalid_argument("detection_probability_from_wave: single slit only");
  const ComplexQuadratic p2b = psi2b_components(setup).front();
  const cplx a = p2b.alpha();
  const cplx s = p2b.center();
  const cplx c = p2b.offset();
  const double ar = a.real();
  const double si = s.imag();
  return std::sqrt(kPi / (-2.0 * ar)) *
         std::exp(-2.0 * std::norm(a) * si * si / ar + 2.0 * c.real());
}

double detection_probability_small_slit(const ExperimentSetup& setup) {
  setup.validate();
  if (!setup.single_slit())
    throw std::invalid_argument("detection_probability_small_slit: single slit only");
  const double s1 = setup.entrance.front().sigma;
  const double s2 = setup.exit_slit.sigma;
  const double ds = setup.entrance.front().center - setup.exit_slit.center;
  const double d1 = setup.d1();
  return (s1 * s2 / d1) * std::exp(-s1 * s1 * ds * ds / (2.0 * d1 * d1));
}

std::vector<std::pair<double, double>> hard_edge_pattern(
    const ExperimentSetup& setup, const std::vector<double>& s2_grid) {
  if (!setup.single_slit())
    throw std::invalid_argument("hard_edge_pattern: single entrance slit only");
  const ComplexQuadratic psi2a = psi_at(setup, setup.length);
  const double w = std::sqrt(2.0 * kPi) * setup.exit_slit.sigma;
  std::vector<std::pair<double, double>> out;
  out.reserve(s2_grid.size());
  for (double s2 : s2_grid) {
    const double density = std::exp(2.0 * psi2a.log_at(s2).real());
    out.emplace_back(s2, density * w);
  }
  return out;
}

bool hard_edge_valid(const ExperimentSetup& setup) {
  return std::sqrt(2.0 * kPi) * setup.exit_slit.sigma <
         0.1 * rms_width_psi(setup, setup.length);
}

}  // namespace spindle
