#include <algorithm>
#include <cmath>
#include <numeric>

#include "pql/radial/radial.hpp"

namespace pql::radial {
namespace {

double A(int n, double x) { return 2.0 / n * (1 + x) * (1 + x) - 2 * x * x; }
double B(int n, double l, double x, double y) { return 4.0 / n * (1 + x) * (1 + y) - 4 * x * y - 2 * l; }

struct Radial {
  double u, w, dw, d2w, H, dH, d2H, L, Z, d2u;
};

// w = u'/u and H = w^2 with two derivatives, plus L and Z.
Radial radial_at(const ClosedForm& f, double r) {
  if (!(r > 0)) throw PreconditionError("radius must be positive");
  Jet j = f.jet(r);
  Radial s;
  s.u = j.u;
  s.d2u = j.d2u;
  s.w = j.du / j.u;
  s.dw = j.d2u / j.u - s.w * s.w;
  s.d2w = j.d3u / j.u - s.w * j.d2u / j.u - 2 * s.w * s.dw;
  s.H = s.w * s.w;
  s.dH = 2 * s.w * s.dw;
  s.d2H = 2 * s.dw * s.dw + 2 * s.w * s.d2w;
  if (s.H == 0) throw PreconditionError("H vanishes at this radius");
  s.L = std::pow(std::abs(s.w), f.q) * std::pow(j.u, f.p + f.q - 1);
  s.Z = s.L / s.H;
  return s;
}

double deviation(int n, const Radial& s, double beta, double sigma, double r) {
  double c = 1 + beta + sigma * s.Z;
  double a_r = s.d2u / s.u - c * s.w * s.w;
  double a_t = s.w / r;
  return (n - 1.0) / n * (a_r - a_t) * (a_r - a_t);
}

}  // namespace

double IdentitySides::relative() const { return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300); }

IdentitySides deltaH_sides(int n, double q, double beta, double sigma, double r) {
  ClosedForm f = ClosedForm::ground_state(n, q);
  Radial s = radial_at(f, r);
  const double l = f.p + q - 1;
  IdentitySides out;
  out.lhs = s.d2H + (n - 1) / r * s.dH;
  out.rhs = A(n, beta) * s.H * s.H + A(n, sigma) * s.L * s.L + B(n, l, beta, sigma) * s.H * s.L +
            (2 * (beta - 1) * s.H + (2 * sigma - q) * s.L) * s.w * s.dH / s.H + 2 * deviation(n, s, beta, sigma, r);
  return out;
}

double deltaH_residual(int n, double q, double beta, double sigma, double r) {
  return deltaH_sides(n, q, beta, sigma, r).residual();
}

double tensor_deviation(int n, double q, double beta, double sigma, double r) {
  ClosedForm f = ClosedForm::ground_state(n, q);
  return deviation(n, radial_at(f, r), beta, sigma, r);
}

std::vector<double> aux_F_profile(int n, double q, const std::vector<double>& r_samples, double d_scale) {
  ClosedForm f = ClosedForm::ground_state(n, q);
  const double beta = 2.0 / (n - 2), d = critical_d(n, q) * d_scale, l = f.p + q - 1;
  std::vector<double> out;
  out.reserve(r_samples.size());
  for (double r : r_samples) {
    if (!(r > 0)) throw PreconditionError("F profile needs r > 0");
    Jet j = f.jet(r);
    double w = j.du / j.u, H = w * w;
    out.push_back(std::pow(j.u, -(1 - q / 2) * beta) * (std::pow(H, 1 - q / 2) + d * std::pow(j.u, l)));
  }
  return out;
}

double relative_spread(const std::vector<double>& v) {
  if (v.empty()) return 0;
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  double worst = 0;
  for (double x : v) worst = std::max(worst, std::abs(x - mean));
  return worst / std::abs(mean);
}

}  // namespace pql::radial
