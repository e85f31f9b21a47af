#include "spindle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>

namespace spindle {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
};

Panel eval_panel(const std::function<cplx(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  cplx kronrod{};
  cplx gauss{};
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    const cplx fv = (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
    kronrod += kWgk[i] * fv;
    if (i % 2 == 1) gauss += kWg[i / 2] * fv;
  }
  kronrod *= h;
  gauss *= h;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

cplx green_value(double x2, double x1, double d) {
  const double beta = 1.0 / (4.0 * d);
  const cplx i{0.0, 1.0};
  const double dx = x2 - x1;
  return std::sqrt(beta / (i * kPi)) * std::exp(i * beta * dx * dx);
}

double local_center(const ComplexQuadratic& q) {
  return q.has_curvature() ? q.center().real() : 0.0;
}

double local_width(const ComplexQuadratic& q) {
  const double ar = q.poly().a.real();
  return ar < 0.0 ? 1.0 / std::sqrt(-2.0 * ar) : 1e-3;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

QuadResult integrate(const std::function<cplx(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
  auto cmp = [](const Panel& l, const Panel& r) { return l.error < r.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> queue(cmp);

  // Seed with enough panels that chirped integrands are resolved before
  // the error estimate is trusted.
  const int seed_panels = 64;
  cplx total{};
  double total_err = 0.0;
  for (int i = 0; i < seed_panels; ++i) {
    const double lo = a + (b - a) * i / seed_panels;
    const double hi = a + (b - a) * (i + 1) / seed_panels;
    Panel p = eval_panel(f, lo, hi);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }

  int splits = 0;
  while (total_err > spec.rel_tol * std::max(std::abs(total), 1e-300) &&
         splits < spec.max_subdivisions) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (Panel p : {eval_panel(f, worst.a, mid), eval_panel(f, mid, worst.b)}) {
      total += p.value;
      total_err += p.error;
      queue.push(p);
    }
    ++splits;
  }
  // Fixed-order reduction for reproducibility: re-sum panels by interval.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  cplx value{};
  double err = 0.0;
  for (const Panel& p : panels) {
    value += p.value;
    err += p.error;
  }
  const bool ok = err <= spec.rel_tol * std::max(std::abs(value), 1e-300) * 16.0;
  return QuadResult{value, err, ok};
}

QuadResult quad_propagate(const ComplexQuadratic& source,
                          const std::vector<double>& leg_d,
                          const std::function<cplx(double)>& mask_between,
                          double x_eval, const QuadratureSpec& spec) {
  if (leg_d.empty() || leg_d.size() > 2)
    throw std::invalid_argument("quad_propagate: one or two legs");
  for (double d : leg_d)
    if (!(d > 0.0)) throw DegenerateDistance("quad_propagate: leg distance <= 0");

  const double c0 = local_center(source);
  const double w0 = local_width(source);
  const double lo0 = c0 - spec.half_width_units * w0;
  const double hi0 = c0 + spec.half_width_units * w0;

  if (leg_d.size() == 1) {
    return integrate(
        [&](double x1) { return green_value(x_eval, x1, leg_d[0]) * source.at(x1); },
        lo0, hi0, spec);
  }

  // Two legs: outer integral over the intermediate plane; the inner
  // integral is re-evaluated per outer node.
  const double spread1 = std::sqrt(w0 * w0 + 2.0 * leg_d[0] * leg_d[0] / (w0 * w0));
  const double lo1 = c0 - spec.half_width_units * spread1;
  const double hi1 = c0 + spec.half_width_units * spread1;
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  bool inner_ok = true;
  double inner_err = 0.0;
  auto middle = [&](double x) -> cplx {
    QuadResult r = integrate(
        [&](double x1) { return green_value(x, x1, leg_d[0]) * source.at(x1); },
        lo0, hi0, inner);
    inner_ok = inner_ok && r.converged;
    inner_err = std::max(inner_err, r.error);
    return mask_between(x) * r.value * green_value(x_eval, x, leg_d[1]);
  };
  QuadResult outer = integrate(middle, lo1, hi1, spec);
  outer.converged = outer.converged && inner_ok;
  outer.error += inner_err * (hi1 - lo1);
  return outer;
}

double quad_detection_probability(const ExperimentSetup& setup,
                                  const QuadratureSpec& spec) {
  if (!setup.single_slit())
    throw std::invalid_argument("quad_detection_probability: single slit only");
  const ComplexQuadratic psi1 = setup.entrance.front().normalized_wave();
  const double d1 = setup.d1();
  const double c0 = setup.entrance.front().center;
  const double w0 = setup.entrance.front().sigma;
  const double lo0 = c0 - spec.half_width_units * w0;
  const double hi0 = c0 + spec.half_width_units * w0;

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  auto psi2a = [&](double x2) {
    return integrate(
               [&](double x1) { return green_value(x2, x1, d1) * psi1.at(x1); },
               lo0, hi0, inner)
        .value;
  };
  const double s2 = setup.exit_slit.center;
  const double sg2 = setup.exit_slit.sigma;
  QuadResult res = integrate(
      [&](double x2) {
        const double m = std::exp(-(x2 - s2) * (x2 - s2) / (2.0 * sg2 * sg2));
        return cplx{m * std::norm(psi2a(x2)), 0.0};
      },
      s2 - spec.half_width_units * sg2, s2 + spec.half_width_units * sg2, spec);
  return res.value.real();
}

double quad_blocking_difference(const ExperimentSetup& setup, const PinSpec& pin,
                                const QuadratureSpec& spec) {
  if (!setup.single_slit())
    throw std::invalid_argument("quad_blocking_difference: single slit only");
  const ComplexQuadratic psi = psi_at(setup, pin.z);
  const ComplexQuadratic psi2a = psi_at(setup, setup.length);
  const double d2 = setup.d1() - setup.dparam(pin.z);

  const double pl = pin.center - spec.half_width_units * pin.sigma;
  const double ph = pin.center + spec.half_width_units * pin.sigma;
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 0.1, 1e-13);
  // T(x2) = int G(x2, x; d2) exp(-(x-xp)^2/(2 sigma^2)) psi(x, z) dx,
  // the amplitude removed by the pin.
  auto pin_amplitude = [&](double x2) {
    return integrate(
               [&](double x) {
                 const double g = std::exp(-(x - pin.center) * (x - pin.center) /
                                           (2.0 * pin.sigma * pin.sigma));
                 return green_value(x2, x, d2) * g * psi.at(x);
               },
               pl, ph, inner)
        .value;
  };
  const double s2 = setup.exit_slit.center;
  const double sg2 = setup.exit_slit.sigma;
  QuadResult res = integrate(
      [&](double x2) {
        const double f2sq = std::exp(-(x2 - s2) * (x2 - s2) / (2.0 * sg2 * sg2));
        const cplx t = pin_amplitude(x2);
        const cplx a = psi2a.at(x2);
        return cplx{f2sq * (2.0 * (std::conj(a) * t).real() - std::norm(t)), 0.0};
      },
      s2 - spec.half_width_units * sg2, s2 + spec.half_width_units * sg2, spec);
  return res.value.real();
}

double fd_functional_derivative(const ExperimentSetup& setup, double z, double x,
                                const std::vector<double>& widths,
                                const QuadratureSpec& spec) {
  if (widths.size() < 2)
    throw std::invalid_argument("fd_functional_derivative: need >= 2 widths");
  for (std::size_t i = 1; i < widths.size(); ++i)
    if (widths[i] >= widths[i - 1])
      throw std::invalid_argument("fd_functional_derivative: widths must decrease");
  if (widths.back() < 5e-8)
    throw std::invalid_argument("fd_functional_derivative: smallest width < 0.05um");

  std::vector<double> est;
  est.reserve(widths.size());
  for (double w : widths) {
    PinSpec pin{x, w / std::sqrt(2.0 * kPi), z};
    est.push_back(quad_blocking_difference(setup, pin, spec) / w);
  }
  // Richardson in w^2.
  std::vector<double> cur = est;
  for (std::size_t lvl = 1; lvl < est.size(); ++lvl) {
    for (std::size_t i = 0; i + lvl < est.size(); ++i) {
      const double r = widths[i] / widths[i + lvl];
      const double r2 = r * r;
      cur[i] = (r2 * cur[i + 1] - cur[i]) / (r2 - 1.0);
    }
  }
  const double extrapolated = cur[0];
  const double residual = std::abs(extrapolated - est.back());
  // Quadrature noise floor of (P0 - Pw)/w; below it the derivative is
  // zero within noise (deep tail) and the relative test is meaningless.
  const double noise =
      64.0 * spec.rel_tol * detection_probability(setup) / widths.back();
  if (residual > 1e-2 * std::abs(extrapolated) && residual > noise)
    throw NonConvergent("fd_functional_derivative: extrapolation residual too large");
  return extrapolated;
}

long long poisson_draw(double mean, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  if (mean <= 0.0) return 0;
  if (mean < 30.0) {
    // Knuth inversion.
    const double limit = std::exp(-mean);
    double prod = uni(rng);
    long long k = 0;
    while (prod > limit) {
      prod *= uni(rng);
      ++k;
    }
    return k;
  }
  // Hormann PTRS transformed rejection.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  while (true) {
    double u = uni(rng) - 0.5;
    double v = uni(rng);
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<long long>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * std::log(mean) - mean - std::lgamma(k + 1.0))
      return static_cast<long long>(k);
  }
}

CountingResult simulate_counts(const ExperimentSetup& setup, const PinSpec& pin,
                               double mean_counts, int n_trials, std::uint64_t seed) {
  if (n_trials < 1) throw std::invalid_argument("simulate_counts: n_trials < 1");
  if (!(mean_counts > 0.0))
    throw std::invalid_argument("simulate_counts: mean_counts <= 0");
  const PerturbativeKernel kernel = kernel_at(setup, pin.z);
  const double ratio_true = pin_blocking(kernel, pin);

  long long with_pin = 0;
  long long without_pin = 0;
  for (int t = 0; t < n_trials; ++t) {
    // Per-trial derived seeds keep results independent of trial order
    // (and hence of any parallel schedule).
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1);
    const std::uint64_t s_off = splitmix64(s);
    const std::uint64_t s_on = splitmix64(s);
    without_pin += poisson_draw(mean_counts, s_off);
    with_pin += poisson_draw(mean_counts * (1.0 + ratio_true), s_on);
  }
  CountingResult out;
  out.n_with_pin = with_pin;
  out.n_without_pin = without_pin;
  out.ratio_estimate =
      static_cast<double>(with_pin) / static_cast<double>(without_pin);
  out.rms_error = out.ratio_estimate *
                  std::sqrt(1.0 / static_cast<double>(with_pin) +
                            1.0 / static_cast<double>(without_pin));
  out.seed = seed;
  return out;
}

}  // namespace spindle
