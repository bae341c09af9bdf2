#include <cmath>

#include "pql/radial/radial.hpp"

namespace pql::radial {
namespace {

void check_ground_state_domain(int n, double q) {
  if (n < 3) throw PreconditionError("ground state needs n >= 3");
  if (!(q > 0 && q < 1)) throw PreconditionError("ground state needs 0 < q < 1");
  if (!(n - (n - 1) * q > 0)) throw PreconditionError("ground state needs n - (n-1) q > 0");
}

}  // namespace

double critical_d(int n, double q) { return (1 - q) * (n - 2) / (n - (n - 1) * q); }

ClosedForm ClosedForm::ground_state(int n, double q) {
  check_ground_state_domain(n, q);
  ClosedForm f;
  f.kind = Kind::GroundState;
  f.n = n;
  f.q = q;
  f.inner = (2 - q) / (1 - q);
  f.outer = (1 - q) * (n - 2) / (2 - q);
  f.K = (1 - q) * std::pow(n - 2.0, q - 1) / (n - (n - 1) * q);
  f.p = (2 - q) * (2 - q) / ((1 - q) * (n - 2)) + 1 - q;
  return f;
}

ClosedForm ClosedForm::singular(int n, double p, double q) {
  ClosedForm f;
  f.kind = Kind::Singular;
  f.n = n;
  f.p = p;
  f.q = q;
  f.Lambda = singular_amplitude(n, p, q);
  f.a = (2 - q) / (p + q - 1);
  return f;
}

ClosedForm ClosedForm::constant(int n, double p, double q, double c) {
  if (!(c > 0)) throw PreconditionError("constant solution needs c > 0");
  ClosedForm f;
  f.kind = Kind::Constant;
  f.n = n;
  f.p = p;
  f.q = q;
  f.c = c;
  return f;
}

Jet ClosedForm::jet(double r) const {
  if (r < 0) throw PreconditionError("radius must be non-negative");
  Jet j;
  switch (kind) {
    case Kind::Constant:
      j.u = c;
      break;
    case Kind::Singular: {
      if (r == 0) throw PreconditionError("singular solution is undefined at r = 0");
      double u = Lambda * std::pow(r, -a);
      j.u = u;
      j.du = -a * u / r;
      j.d2u = a * (a + 1) * u / (r * r);
      j.d3u = -a * (a + 1) * (a + 2) * u / (r * r * r);
      break;
    }
    case Kind::GroundState: {
      // u = s^-b with s = K + r^a
      const double a = inner, b = outer;
      double s = K + std::pow(r, a);
      double s1 = r > 0 ? a * std::pow(r, a - 1) : 0;
      double s2 = r > 0 ? a * (a - 1) * std::pow(r, a - 2) : 0;
      double s3 = r > 0 ? a * (a - 1) * (a - 2) * std::pow(r, a - 3) : 0;
      double u = std::pow(s, -b);
      j.u = u;
      j.du = -b * u / s * s1;
      j.d2u = b * (b + 1) * u / (s * s) * s1 * s1 - b * u / s * s2;
      j.d3u = -b * (b + 1) * (b + 2) * u / (s * s * s) * s1 * s1 * s1 + 3 * b * (b + 1) * u / (s * s) * s1 * s2 -
              b * u / s * s3;
      break;
    }
  }
  return j;
}

namespace {

struct Terms {
  double second, first, nonlinear;
};

Terms pde_terms(const ClosedForm& f, double r) {
  if (!(r > 0)) throw PreconditionError("residual needs r > 0");
  Jet j = f.jet(r);
  return {j.d2u, (f.n - 1) / r * j.du, std::pow(std::abs(j.du), f.q) * std::pow(j.u, f.p)};
}

}  // namespace

double pde_residual_radial(const ClosedForm& form, double r) {
  Terms t = pde_terms(form, r);
  return t.second + t.first + t.nonlinear;
}

double pde_residual_relative(const ClosedForm& form, double r) {
  Terms t = pde_terms(form, r);
  double scale = std::abs(t.second) + std::abs(t.first) + std::abs(t.nonlinear);
  return std::abs(t.second + t.first + t.nonlinear) / (scale + 1e-300);
}

double singular_amplitude(int n, double p, double q) {
  if (n < 3) throw PreconditionError("singular solution needs n >= 3");
  if (!(q >= 0 && q < 2)) throw PreconditionError("singular solution needs 0 <= q < 2");
  const double l = p + q - 1;
  if (!(l > (2 - q) / (n - 2)))
    throw PreconditionError("singular solution needs p+q-1 > (2-q)/(n-2)");
  const double a = (2 - q) / l;
  // power matching of u'' + (n-1)u'/r against |u'|^q u^p
  if (std::abs((a + 1) * q + a * p - (a + 2)) > 1e-12 * (a + 2))
    throw InternalError("singular exponent does not balance");
  return std::pow((n - 2 - a) * std::pow(a, 1 - q), 1 / l);
}

DerivedQuantities ground_state_eval(int n, double q, double r) {
  ClosedForm f = ClosedForm::ground_state(n, q);
  if (r < 0) throw PreconditionError("radius must be non-negative");
  Jet j = f.jet(r);
  DerivedQuantities d;
  d.r = r;
  d.u = j.u;
  d.du = j.du;
  d.d2u = j.d2u;
  const double l = f.p + q - 1, w = j.du / j.u;
  d.H = w * w;
  d.L = std::pow(std::abs(w), q) * std::pow(j.u, l);
  d.Z = d.H > 0 ? d.L / d.H : 0;
  const double beta = 2.0 / (n - 2);
  d.F = std::pow(j.u, -(1 - q / 2) * beta) * (std::pow(d.H, 1 - q / 2) + critical_d(n, q) * std::pow(j.u, l));
  return d;
}

}  // namespace pql::radial
