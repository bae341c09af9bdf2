#pragma once

#include <string>
#include <vector>

#include "pql/common.hpp"

namespace pql::radial {

/// u and its first three radial derivatives.
struct Jet {
  double u = 0, du = 0, d2u = 0, d3u = 0;
};

/// Explicit radial solutions of  u'' + (n-1)/r u' + |u'|^q u^p = 0.
struct ClosedForm {
  enum class Kind { GroundState, Singular, Constant };
  Kind kind = Kind::Constant;
  int n = 3;
  double p = 0, q = 0;
  // ground state  u = (K + r^inner)^(-outer)
  double K = 0, inner = 0, outer = 0;
  // singular  u = Lambda r^(-a)
  double Lambda = 0, a = 0;
  // constant
  double c = 0;

  static ClosedForm ground_state(int n, double q);
  static ClosedForm singular(int n, double p, double q);
  static ClosedForm constant(int n, double p, double q, double c);

  Jet jet(double r) const;
};

/// Values of the Bernstein quantities at one radius.
struct DerivedQuantities {
  double r = 0;
  double u = 0, du = 0, d2u = 0;
  double H = 0, L = 0, Z = 0;
  double F = 0;  // with beta = 2/(n-2) and the critical d
};

double critical_d(int n, double q);  // (1-q)(n-2)/(n-(n-1)q)

DerivedQuantities ground_state_eval(int n, double q, double r);

/// u'' + (n-1)/r u' + |u'|^q u^p at r.
double pde_residual_radial(const ClosedForm& form, double r);
/// The same divided by the sum of the magnitudes of its three terms (plus a floor).
double pde_residual_relative(const ClosedForm& form, double r);

double singular_amplitude(int n, double p, double q);

struct IdentitySides {
  double lhs = 0, rhs = 0;
  double residual() const { return lhs - rhs; }
  double relative() const;
};
IdentitySides deltaH_sides(int n, double q, double beta, double sigma, double r);
double deltaH_residual(int n, double q, double beta, double sigma, double r);
double tensor_deviation(int n, double q, double beta, double sigma, double r);

/// F(r) on the ground state; d_scale multiplies the critical d (1 reproduces constancy).
std::vector<double> aux_F_profile(int n, double q, const std::vector<double>& r_samples, double d_scale = 1.0);
double relative_spread(const std::vector<double>& values);

struct RadialOutcome {
  enum class Status { PositiveGlobal, HitsZero, Undecided };
  Status status = Status::Undecided;
  double radius = 0;  // zero of u for HitsZero
  std::string reason;
  int steps = 0;
  double final_r = 0, final_u = 0, final_du = 0;
  std::vector<double> probe_values;  // u at the requested probe radii reached before stopping
};
const char* to_string(RadialOutcome::Status s);

struct ShootOptions {
  std::vector<double> probes;  // increasing radii where u is recorded
  long max_steps = 2'000'000;
};

RadialOutcome shoot(int n, double p, double q, double u0, double r_max, double tol, const ShootOptions& opt = {});

struct ThresholdResult {
  double p_star = 0;
  double p_lo = 0, p_hi = 0;
  int shots = 0;
};
ThresholdResult existence_threshold_run(int n, double q, double p_lo, double p_hi, double p_tol);
double existence_threshold(int n, double q, double p_lo, double p_hi, double p_tol);

}  // namespace pql::radial
