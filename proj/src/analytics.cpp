#include "spindle/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindle {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpindleAnalytics spindle_at(const PerturbativeKernel& kernel) {
  const double ar = kernel.alpha_chi.real();
  const double ai = kernel.alpha_chi.imag();
  const double xr = kernel.x_c.real();
  const double xi = kernel.x_c.imag();
  if (std::abs(ai) < 1e-30)
    throw DegeneratePhase("spindle_at: Im(alpha_chi) ~ 0, no fringes");
  SpindleAnalytics out;
  out.x_c0 = xr + (ar / ai) * xi;
  out.x_pi = std::sqrt(kPi / std::abs(ai));
  out.x_max = (ar * xr - ai * xi) / ar;
  out.sigma_w = std::sqrt(-1.0 / (2.0 * ar));
  out.z = kernel.z;
  out.phase_sign = ai > 0.0 ? 1 : -1;
  return out;
}

SmallSlitLimits small_slit_limits(const ScaledParams& params, double sigma1,
                                  double lambda, double length) {
  const double mu = params.mu, rho = params.rho, xi = params.xi;
  SmallSlitLimits out;
  out.in_domain = mu < 0.1 && xi > 3.0 * mu && xi < 1.0 - 3.0 * mu;

  const double s1sq = sigma1 * sigma1;
  const double xm1 = xi - 1.0;
  const double re = -(mu * mu / (2.0 * s1sq)) * (rho * xi * xi + 2.0 * xm1 * xm1) /
                    (4.0 * xi * xi * xm1 * xm1);
  const double im = -(mu / (4.0 * s1sq)) / (xi * xm1);
  out.alpha_chi = cplx{re, im};
  out.x_pi = std::sqrt(lambda * length * xi * (1.0 - xi));
  out.sigma_w = (lambda * length / (2.0 * std::sqrt(2.0) * kPi * sigma1)) *
                std::sqrt(xi * xi * xm1 * xm1 /
                          ((rho / 2.0) * xi * xi + xm1 * xm1));
  return out;
}

EnvelopeRoot max_envelope_position(double rho) {
  if (rho < 0.0) throw std::invalid_argument("max_envelope_position: rho < 0");
  const auto cubic = [rho](double xi) {
    return ((rho + 2.0) * xi - 6.0) * xi * xi + 6.0 * xi - 2.0;
  };
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double flo = cubic(lo), fhi = cubic(hi);
  if (flo * fhi > 0.0) {
    // rho -> 0 degenerates to 2(xi-1)^3: the root walks into the exit
    // boundary and the bracket closes.
    if (fhi <= 0.0) return EnvelopeRoot{hi, true};
    throw NoRootInUnitInterval("max_envelope_position: no sign change in (0,1)");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (cubic(mid) * flo <= 0.0)
      hi = mid;
    else {
      lo = mid;
      flo = cubic(lo);
    }
  }
  return EnvelopeRoot{0.5 * (lo + hi), false};
}

CountingErrors counting_error(const CountingPlan& plan) {
  if (plan.n_counts <= 0) throw std::invalid_argument("counting_error: n_counts <= 0");
  CountingErrors out;
  out.statistical = (1.0 / std::sqrt(static_cast<double>(plan.n_counts))) /
                    std::abs(plan.expected_ratio);
  out.systematic =
      plan.field_mean != 0.0 ? plan.field_variation / std::abs(plan.field_mean) : 0.0;
  return out;
}

}  // namespace spindle
