#include "spindle/quadform.hpp"

#include <cmath>
#include <numbers>

namespace spindle {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool integrable(const PolyCoeffs& p) { return p.a.real() < -kIntegrableEps; }
bool integrable(const ComplexQuadratic& q) { return integrable(q.poly()); }

cplx gauss_integrate(const PolyCoeffs& p) {
  if (!integrable(p))
    throw NonIntegrable("gauss_integrate: Re(a) >= 0, integral diverges");
  return std::sqrt(kPi / -p.a) * std::exp(-p.b * p.b / (4.0 * p.a) + p.c);
}

cplx gauss_integrate(const ComplexQuadratic& q) { return gauss_integrate(q.poly()); }

cplx log_gauss_integrate(const PolyCoeffs& p) {
  if (!integrable(p))
    throw NonIntegrable("log_gauss_integrate: Re(a) >= 0, integral diverges");
  return 0.5 * std::log(kPi / -p.a) - p.b * p.b / (4.0 * p.a) + p.c;
}

ComplexQuadratic green_factor(double d, double x0) {
  if (d <= 0.0) throw DegenerateDistance("green_factor: d <= 0");
  const double beta = 1.0 / (4.0 * d);
  const cplx ibeta{0.0, beta};
  return ComplexQuadratic(ibeta, x0, 0.5 * std::log(beta / (cplx{0.0, 1.0} * kPi)));
}

ComplexQuadratic propagate_through(const ComplexQuadratic& f, double d) {
  if (d < 0.0) throw DegenerateDistance("propagate_through: d < 0");
  if (d == 0.0) return f;
  const PolyCoeffs& p = f.poly();
  if (p.a.real() >= -kIntegrableEps)
    throw NonIntegrable("propagate_through: form not integrable against kernel");
  const double beta = 1.0 / (4.0 * d);
  const cplx ibeta{0.0, beta};
  const cplx den = p.a + ibeta;
  // Exponent prefactors are accumulated as principal logs; each step
  // corresponds to one genuine Gaussian integral with Re(a) < 0, where
  // the principal branch is the value of the integral.
  PolyCoeffs out;
  out.a = ibeta * p.a / den;
  out.b = ibeta * p.b / den;
  out.c = p.c - p.b * p.b / (4.0 * den) +
          0.5 * (std::log(beta / (cplx{0.0, 1.0} * kPi)) + std::log(kPi / -den));
  return ComplexQuadratic(out);
}

}  // namespace spindle
