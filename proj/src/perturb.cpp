#include "spindle/perturb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spindle {

namespace {
constexpr double kPi = std::numbers::pi;

void check_z(const ExperimentSetup& setup, double z, double edge_eps) {
  const double lo = edge_eps * setup.length;
  if (z < lo || z > setup.length - lo)
    throw DegenerateDistance("kernel: z must lie strictly between the slits");
}
}  // namespace

double PinSpec::effective_width() const { return std::sqrt(2.0 * kPi) * sigma; }

PerturbativeKernel kernel_at(const ExperimentSetup& setup, double z, double edge_eps) {
  setup.validate();
  if (!setup.single_slit())
    throw std::invalid_argument("kernel_at: single entrance slit only");
  check_z(setup, z, edge_eps);

  const ScaledParams p = setup.scaled(z);
  const double mu = p.mu, rho = p.rho, xi = p.xi;
  const double m = mu * mu + rho * mu * mu + 1.0;
  const double s1sq = setup.entrance.front().sigma * setup.entrance.front().sigma;
  const cplx i{0.0, 1.0};

  const cplx denom = (-i * mu + xi) *
                     (mu * (i * xi - mu) * rho + 2.0 * (xi - 1.0) * (i * mu + 1.0));
  const cplx alpha = -(0.5 / s1sq) * i * mu * m / denom;

  const cplx cs1 = rho * mu * mu - (i * mu + 1.0) * (xi - 1.0);
  const cplx cs2 = (mu - i) * (mu + i * xi);
  const cplx xc =
      (cs1 * setup.entrance.front().center + cs2 * setup.exit_slit.center) / m;

  return PerturbativeKernel{detection_probability(setup), alpha, xc, z};
}

ComplexQuadratic composed_product(const ExperimentSetup& setup, double z) {
  // psi: entrance wave propagated to the pin plane.
  // phi_b: conj(psi_2b) * f2, transported back from the exit plane to the
  // pin plane (the kernel is symmetric in its endpoints, so back
  // transport is propagate_through over the remaining distance).
  const ComplexQuadratic psi = psi_at(setup, z);
  const ComplexQuadratic psi2b = psi2b_components(setup).front();
  const ComplexQuadratic mask = setup.exit_slit.mask();
  const double d2 = setup.d1() - setup.dparam(z);
  const ComplexQuadratic phi_b =
      propagate_through(multiply(conj_form(psi2b), mask), d2);
  return multiply(phi_b, psi);
}

PerturbativeKernel kernel_from_waves(const ExperimentSetup& setup, double z,
                                     double edge_eps) {
  setup.validate();
  if (!setup.single_slit())
    throw std::invalid_argument("kernel_from_waves: single entrance slit only");
  check_z(setup, z, edge_eps);
  const ComplexQuadratic prod = composed_product(setup, z);
  // (1/2) int (prod + c.c.) dx = Re int prod = P2b; this fixes p2b
  // without the scaled formula.
  const double p2b = gauss_integrate(prod).real();
  return PerturbativeKernel{p2b, prod.alpha(), prod.center(), z};
}

double field(const PerturbativeKernel& kernel, double x) {
  const cplx w = kernel.p2b * std::sqrt(-kernel.alpha_chi) / std::sqrt(kPi);
  const cplx dx = x - kernel.x_c;
  return 2.0 * (w * std::exp(kernel.alpha_chi * dx * dx)).real();
}

double integral_identity_check(const ExperimentSetup& setup,
                               const std::vector<double>& z_list) {
  double worst = 0.0;
  for (double z : z_list) {
    const PerturbativeKernel k = kernel_at(setup, z);
    const cplx w = k.p2b * std::sqrt(-k.alpha_chi) / std::sqrt(kPi);
    // (1/2) int field dx with the Gaussian integral done in closed form.
    const double integral = (w * std::sqrt(kPi / -k.alpha_chi)).real();
    worst = std::max(worst, std::abs(integral - k.p2b) / k.p2b);
  }
  return worst;
}

double pin_blocking(const PerturbativeKernel& kernel, const PinSpec& pin) {
  if (std::abs(pin.z - kernel.z) > 1e-9 * std::max(1.0, std::abs(kernel.z)))
    throw std::invalid_argument("pin_blocking: pin.z != kernel.z");
  if (!(pin.sigma > 0.0)) throw std::invalid_argument("pin sigma must be > 0");
  const cplx a = kernel.alpha_chi;
  const double inv2s = 1.0 / (2.0 * pin.sigma * pin.sigma);
  const cplx t = a - inv2s;
  if (t.real() >= 0.0)
    throw BranchError("pin_blocking: Re(alpha_chi - 1/2 sigma^2) >= 0");
  const double x = pin.center;
  const cplx num = x / (pin.sigma * pin.sigma) - 2.0 * a * kernel.x_c;
  const cplx val = -std::sqrt(a / t) *
                   std::exp(-num * num / (4.0 * t) + a * kernel.x_c * kernel.x_c -
                            inv2s * x * x);
  return 2.0 * val.real();
}

}  // namespace spindle
