#include "spindle/interference.hpp"

#include <cmath>
#include <stdexcept>

namespace spindle {

namespace {

void check_z(const ExperimentSetup& setup, double z, double edge_eps) {
  const double lo = edge_eps * setup.length;
  if (z < lo || z > setup.length - lo)
    throw DegenerateDistance("double_slit_kernel: z must lie strictly between the slits");
}

}  // namespace

CompositeKernel double_slit_kernel(const ExperimentSetup& setup, double z,
                                   double edge_eps) {
  std::vector<std::string> warnings;
  setup.validate(&warnings);
  if (!setup.double_slit())
    throw std::invalid_argument("double_slit_kernel: two entrance slits required");
  check_z(setup, z, edge_eps);

  const std::vector<ComplexQuadratic> psis = psi_components(setup, z);
  const std::vector<ComplexQuadratic> psi2bs = psi2b_components(setup);
  const ComplexQuadratic mask = setup.exit_slit.mask();
  const double d2 = setup.d1() - setup.dparam(z);

  CompositeKernel out;
  out.z = z;
  std::size_t idx = 0;
  double prob = 0.0;
  for (std::size_t back = 0; back < 2; ++back) {
    const ComplexQuadratic phi_b =
        propagate_through(multiply(conj_form(psi2bs[back]), mask), d2);
    for (std::size_t fwd = 0; fwd < 2; ++fwd) {
      const ComplexQuadratic prod = multiply(phi_b, psis[fwd]);
      out.terms[idx] = CompositeKernel::Term{prod.offset(), prod.center()};
      if (idx == 0) out.alpha_chi = prod.alpha();
      prob += gauss_integrate(prod).real();
      ++idx;
    }
  }
  // field(x) = sum_j 2 Re exp(...), so the 1/2 in P2b = (1/2) int field
  // cancels against the pairing with c.c.
  out.p2b = prob;
  return out;
}

double field(const CompositeKernel& kernel, double x) {
  double acc = 0.0;
  for (const auto& t : kernel.terms) {
    const cplx dx = x - t.x_c;
    acc += 2.0 * std::exp(t.log_weight + kernel.alpha_chi * dx * dx).real();
  }
  return acc;
}

std::vector<std::pair<double, double>> pattern(const ExperimentSetup& setup,
                                               const std::vector<double>& s2_grid,
                                               double kernel_z) {
  if (!setup.double_slit())
    throw std::invalid_argument("pattern: two entrance slits required");
  std::vector<std::pair<double, double>> out;
  out.reserve(s2_grid.size());
  ExperimentSetup scan = setup;
  for (double s2 : s2_grid) {
    scan.exit_slit.center = s2;
    out.emplace_back(s2, double_slit_kernel(scan, kernel_z).p2b);
  }
  return out;
}

}  // namespace spindle
