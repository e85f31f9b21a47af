#pragma once

// Complex Gaussian quadratic-form algebra. Everything downstream (slit
// masks, propagated wave functions, perturbative kernels) is a function
// of the form exp(q(x)) with q a complex quadratic, so closed-form
// multiplication, Gaussian integration and free propagation of these
// forms is the whole integration engine.

#include <complex>
#include <stdexcept>

namespace spindle {

using cplx = std::complex<double>;

// Re(a) must be below this for a form to count as integrable; guards
// against catastrophic cancellation producing a sign flip near zero.
inline constexpr double kIntegrableEps = 1e-30;

struct NonIntegrable : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateDistance : std::domain_error {
  using std::domain_error::domain_error;
};

// Expanded representation a*x^2 + b*x + c.
struct PolyCoeffs {
  cplx a{};  // 1/m^2
  cplx b{};  // 1/m
  cplx c{};  // dimensionless

  cplx eval(double x) const { return (a * x + b) * x + c; }
};

// ln g(x) = alpha*(x - center)^2 + offset, stored expanded so that
// zero-curvature products (e.g. a mask times its conjugate kernel)
// stay representable.
class ComplexQuadratic {
 public:
  ComplexQuadratic() = default;
  explicit ComplexQuadratic(const PolyCoeffs& p) : p_(p) {}
  ComplexQuadratic(cplx alpha, cplx center, cplx offset)
      : p_{alpha, -2.0 * alpha * center, alpha * center * center + offset} {}

  const PolyCoeffs& poly() const { return p_; }
  cplx alpha() const { return p_.a; }
  bool has_curvature() const { return p_.a != cplx{0.0, 0.0}; }

  cplx center() const {
    require_curvature();
    return -p_.b / (2.0 * p_.a);
  }
  cplx offset() const {
    require_curvature();
    return p_.c - p_.b * p_.b / (4.0 * p_.a);
  }

  // ln g(x) and g(x) for real x.
  cplx log_at(double x) const { return p_.eval(x); }
  cplx at(double x) const { return std::exp(p_.eval(x)); }

 private:
  void require_curvature() const {
    if (!has_curvature())
      throw std::logic_error("zero-curvature form has no center/offset");
  }
  PolyCoeffs p_{};
};

inline PolyCoeffs expand(const ComplexQuadratic& q) { return q.poly(); }

inline ComplexQuadratic complete_square(const PolyCoeffs& p) {
  return ComplexQuadratic(p);
}

// Complex conjugate of the represented function on the real axis.
inline ComplexQuadratic conj_form(const ComplexQuadratic& q) {
  return ComplexQuadratic(
      PolyCoeffs{std::conj(q.poly().a), std::conj(q.poly().b), std::conj(q.poly().c)});
}

// Pointwise product; exact coefficient addition, closed for any inputs.
inline ComplexQuadratic multiply(const ComplexQuadratic& f, const ComplexQuadratic& g) {
  return ComplexQuadratic(PolyCoeffs{f.poly().a + g.poly().a,
                                     f.poly().b + g.poly().b,
                                     f.poly().c + g.poly().c});
}

// The quadratic form of 2*Re(ln g), i.e. ln |g(x)|^2 for real x.
inline PolyCoeffs abs_squared(const ComplexQuadratic& q) {
  return PolyCoeffs{2.0 * q.poly().a.real(), 2.0 * q.poly().b.real(),
                    2.0 * q.poly().c.real()};
}

bool integrable(const PolyCoeffs& p);
bool integrable(const ComplexQuadratic& q);

// int exp(a x^2 + b x + c) dx = sqrt(pi/-a) exp(-b^2/(4a) + c), principal
// square-root branch; valid for Re(a) < 0.
cplx gauss_integrate(const PolyCoeffs& p);
cplx gauss_integrate(const ComplexQuadratic& q);
// Same integral as a log, for values whose magnitude over/underflows.
cplx log_gauss_integrate(const PolyCoeffs& p);

// ln G for the free kernel at fixed source point x0 over distance
// parameter d = lambda*dz/(4 pi):  i*beta*(x-x0)^2 + (1/2)ln(beta/(i pi)),
// beta = 1/(4d).
ComplexQuadratic green_factor(double d, double x0 = 0.0);

// Convolution with the free kernel over distance parameter d.  Centered
// forms keep their center; curvature maps to 1/(1/alpha - i/beta).
// d == 0 is the identity, d < 0 is an error.
ComplexQuadratic propagate_through(const ComplexQuadratic& f, double d);

}  // namespace spindle
