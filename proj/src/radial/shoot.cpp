#include <algorithm>
#include <array>
#include <cmath>

#include "pql/radial/radial.hpp"

namespace pql::radial {
namespace {

using State = std::array<double, 2>;  // u, u'

struct Rhs {
  int n;
  double p, q;
  State operator()(double r, const State& y) const {
    double u = std::max(y[0], 0.0);
    return {y[1], -(n - 1) / r * y[1] - std::pow(std::abs(y[1]), q) * std::pow(u, p)};
  }
};

struct StepResult {
  State y;
  double err;  // scaled error norm
};

// One Dormand-Prince 5(4) step.
StepResult dopri_step(const Rhs& f, double r, const State& y, double h, double tol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  auto axpy = [&](std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (auto [c, k] : terms)
      for (int i = 0; i < 2; ++i) out[i] += h * c * (*k)[i];
    return out;
  };
  State k1 = f(r, y);
  State k2 = f(r + c2 * h, axpy({{a21, &k1}}));
  State k3 = f(r + c3 * h, axpy({{a31, &k1}, {a32, &k2}}));
  State k4 = f(r + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  State k5 = f(r + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  State k6 = f(r + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  State y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  State k7 = f(r + h, y5);
  double err = 0;
  for (int i = 0; i < 2; ++i) {
    double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    double sc = tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
    err = std::max(err, std::abs(e) / sc);
  }
  return {y5, err};
}

}  // namespace

const char* to_string(RadialOutcome::Status s) {
  switch (s) {
    case RadialOutcome::Status::PositiveGlobal:
      return "positive_global";
    case RadialOutcome::Status::HitsZero:
      return "hits_zero";
    case RadialOutcome::Status::Undecided:
      return "undecided";
  }
  return "undecided";
}

RadialOutcome shoot(int n, double p, double q, double u0, double r_max, double tol, const ShootOptions& opt) {
  if (!(tol > 0) || !(tol < 1)) throw PreconditionError("shoot needs 0 < tol < 1");
  if (!(u0 > 0)) throw PreconditionError("shoot needs u0 > 0");
  if (!(r_max > 0)) throw PreconditionError("shoot needs r_max > 0");
  if (n < 2) throw PreconditionError("shoot needs n >= 2");
  if (!(q >= 0)) throw PreconditionError("shoot needs q >= 0");
  if (!std::is_sorted(opt.probes.begin(), opt.probes.end())) throw PreconditionError("probe radii must increase");

  RadialOutcome out;
  if (q >= 1) {
    out.reason = "for q >= 1 the regular start u'(0) = 0 only continues as the constant solution";
    out.final_u = u0;
    return out;
  }

  // Leading-order series at the centre: u' ~ -A r^m, m = 1/(1-q), A^(1-q) = u0^p/(m+n-1).
  const double l = p + q - 1;
  const double m = 1 / (1 - q);
  const double A = std::pow(std::pow(u0, p) / (m + n - 1), 1 / (1 - q));
  const double length = l > 0 ? std::pow(u0, -l / (2 - q)) : 1.0;  // natural radius for this u0
  double r = std::min(1e-4 * length, r_max / 2);
  State y{u0 - A * std::pow(r, m + 1) / (m + 1), -A * std::pow(r, m)};

  const Rhs f{n, p, q};
  double h = r;
  std::size_t next_probe = 0;
  while (next_probe < opt.probes.size() && opt.probes[next_probe] < r) {
    out.probe_values.push_back(u0);  // inside the series region u is u0 to working precision
    ++next_probe;
  }

  auto finish = [&](RadialOutcome::Status s, std::string why = {}) {
    out.status = s;
    out.reason = std::move(why);
    out.final_r = r;
    out.final_u = y[0];
    out.final_du = y[1];
    return out;
  };

  while (r < r_max) {
    if (out.steps >= opt.max_steps) return finish(RadialOutcome::Status::Undecided, "step budget exhausted");
    double target = r_max;
    if (next_probe < opt.probes.size()) target = std::min(target, opt.probes[next_probe]);
    double hs = std::min(h, target - r);
    if (hs < 1e-14 * r) return finish(RadialOutcome::Status::Undecided, "step size underflow");
    StepResult s = dopri_step(f, r, y, hs, tol);
    if (!std::isfinite(s.err) || !std::isfinite(s.y[0]) || !std::isfinite(s.y[1])) {
      if (hs < 1e-12 * r) return finish(RadialOutcome::Status::Undecided, "non-finite value");
      h = hs / 4;
      continue;
    }
    double grow = s.err > 0 ? 0.9 * std::pow(s.err, -0.2) : 5.0;
    if (s.err > 1) {
      h = hs * std::max(0.2, grow);
      continue;
    }
    ++out.steps;
    if (s.y[0] <= 0) {
      // bisect the step length for the zero of u
      double lo = 0, hi = hs;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * (r + hi); ++it) {
        double mid = (lo + hi) / 2;
        (dopri_step(f, r, y, mid, tol).y[0] > 0 ? lo : hi) = mid;
      }
      y = dopri_step(f, r, y, hi, tol).y;
      r += hi;
      out.radius = r;
      return finish(RadialOutcome::Status::HitsZero);
    }
    r = (hs == target - r) ? target : r + hs;
    y = s.y;
    h = hs * std::min(5.0, grow);
    if (next_probe < opt.probes.size() && r >= opt.probes[next_probe]) {
      out.probe_values.push_back(y[0]);
      ++next_probe;
    }
  }

  double ratio = r * std::abs(y[1]) / y[0];
  double bound = l > 0 ? 2 * (2 - q) / l + 1 : INFINITY;
  if (y[1] < 0 && ratio <= bound) return finish(RadialOutcome::Status::PositiveGlobal);
  return finish(RadialOutcome::Status::Undecided,
                "decay test failed: r|u'|/u = " + std::to_string(ratio) + " > " + std::to_string(bound));
}

ThresholdResult existence_threshold_run(int n, double q, double p_lo, double p_hi, double p_tol) {
  if (!(q >= 0 && q < 1)) throw PreconditionError("threshold search needs 0 <= q < 1");
  if (!(p_tol > 0)) throw PreconditionError("threshold search needs p_tol > 0");
  if (!(p_lo < p_hi)) throw PreconditionError("threshold bracket must satisfy p_lo < p_hi");
  constexpr double kRmax = 1e3, kTol = 1e-10;
  ThresholdResult res;
  using S = RadialOutcome::Status;
  auto run = [&](double p) {
    ++res.shots;
    RadialOutcome o = shoot(n, p, q, 1.0, kRmax, kTol);
    if (o.status == S::Undecided) {
      // near the threshold the first zero moves far out; retry once, tighter and longer
      ++res.shots;
      o = shoot(n, p, q, 1.0, kRmax * 1e3, kTol * 1e-2);
    }
    if (o.status == S::Undecided)
      throw NumericalError("shooting undecided at p=" + std::to_string(p) + ": " + o.reason);
    return o.status;
  };
  if (run(p_lo) != S::HitsZero) throw PreconditionError("bracket invalid: lower end does not hit zero");
  if (run(p_hi) != S::PositiveGlobal) throw PreconditionError("bracket invalid: upper end is not positive");
  while (p_hi - p_lo > p_tol) {
    double mid = (p_lo + p_hi) / 2;
    (run(mid) == S::HitsZero ? p_lo : p_hi) = mid;
  }
  res.p_lo = p_lo;
  res.p_hi = p_hi;
  res.p_star = (p_lo + p_hi) / 2;
  return res;
}

double existence_threshold(int n, double q, double p_lo, double p_hi, double p_tol) {
  return existence_threshold_run(n, q, p_lo, p_hi, p_tol).p_star;
}

}  // namespace pql::radial
