#include "pql/coeffs/coeffs.hpp"

namespace pql::coeffs {
namespace {

bool positive(const std::vector<Rational>& s) { return s[0] > 0 && s[1] > 0 && s[2] > 0; }

// Given beta and theta, recover d and sigma and certify.
std::optional<Witness> try_point(int n, const Rational& l, const Rational& q, const Rational& beta,
                                 const Rational& theta) {
  Rational h = 1 - q / 2;
  Rational m = l + (q / 2 - 1) * beta;
  if (m <= 0) return std::nullopt;
  Rational d = theta * h / m;
  if (d < 0) return std::nullopt;
  Rational sigma = (2 - n * theta) / (2 * (n - 1));
  auto s = reduced_S(n, l, q, beta, d, sigma);
  if (!positive(s)) return std::nullopt;
  return Witness{beta, d, sigma, theta, s[0], s[1], s[2]};
}

// Shrinks t = 1/4, 1/8, ... down to 2^-30 and returns the first certified point.
template <class F>
std::optional<Witness> bisect(F&& at) {
  Rational t(1, 4);
  const Rational floor(1, 1 << 30);
  while (t >= floor) {
    if (auto w = at(t)) return w;
    t /= 2;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> positivity_witness(int n, const Rational& p, const Rational& q) {
  if (n < 2 || q < 0 || q >= 2) return std::nullopt;
  Rational l = p + q - 1;
  if (n == 2) {
    Rational beta = l > 0 ? Rational(2 * l / (3 - q)) : Rational(0);
    auto s = reduced_S(n, l, q, beta, 0, 0);
    if (!positive(s)) return std::nullopt;
    return Witness{beta, 0, 0, 0, s[0], s[1], s[2]};
  }

  // Approach (beta, theta) = (2/(n-2), 2/(n-(n-1)q)), where S3 has a root and
  // S2 > 0 exactly below the critical curve.
  auto below_critical = [&](const Rational& t) -> std::optional<Witness> {
    if (n - (n - 1) * q <= 0) return std::nullopt;
    Rational beta0(2, n - 2), theta0 = 2 / (n - (n - 1) * q);
    beta0.canonicalize();
    return try_point(n, l, q, beta0 * (1 - t), theta0 * (1 - t));
  };
  // beta = 0, theta just below the root 2.
  auto zero_beta = [&](const Rational& t) { return try_point(n, l, q, 0, 2 * (1 - t)); };

  if (q < 1) {
    if (auto w = bisect(below_critical)) return w;
    return bisect(zero_beta);
  }
  if (auto w = bisect(zero_beta)) return w;
  return bisect(below_critical);
}

RatExpr s3_expression() {
  RatExpr n = RatExpr::var("n"), q = RatExpr::var("q"), theta = RatExpr::var("theta");
  RatExpr sigma = (2L - n * theta) / (2L * (n - 1L));
  return A_func(sigma, n) + (q - 1L - 2L * sigma) * theta - q / 2L * pow(theta, 2);
}

Report s3_quadratic_check() {
  Report r{"S3 quadratic in theta with sigma = (2 - n theta)/(2(n-1))", {}};
  RatExpr n = RatExpr::var("n"), q = RatExpr::var("q"), theta = RatExpr::var("theta");
  RatExpr e = s3_expression();
  RatExpr quad = (n - (n - 1L) * q) * pow(theta, 2) + 2L * ((n - 1L) * (q - 1L) - 2L) * theta + 4L;

  auto add = [&](const std::string& name, const RatExpr& lhs, const RatExpr& rhs, bool info = false) {
    RatExpr diff = lhs - rhs;
    Check c{name, diff.is_zero(), "", info};
    if (!c.ok) c.residual = RatExpr::from_ratfunc(diff.canon()).str();
    r.checks.push_back(c);
  };

  add("2(n-1)*expr == (n-(n-1)q)theta^2 + 2((n-1)(q-1)-2)theta + 4", 2L * (n - 1L) * e, quad);
  add("root theta = 2", substitute(quad, "theta", RatExpr(2L)), RatExpr(0L));
  add("root theta = 2/(n-(n-1)q)", substitute(quad, "theta", 2L / (n - (n - 1L) * q)), RatExpr(0L));
  add("expr at n=3, theta=1 equals q/2 - 1/4",
      substitute(substitute(e, "n", RatExpr(3L)), "theta", RatExpr(1L)), q / 2L - RatExpr(Rational(1, 4)));
  RatExpr shown = (n / (2L * (n - 1L)) - q / 2L) * pow(theta, 2) + (q - 1L - 2L / (n - 2L)) * theta + 2L / (n - 1L);
  RatExpr fixed = (n / (2L * (n - 1L)) - q / 2L) * pow(theta, 2) + (q - 1L - 2L / (n - 1L)) * theta + 2L / (n - 1L);
  add("alternative middle coefficient q-1-2/(n-2)", shown, e, true);
  add("corrected middle coefficient q-1-2/(n-1)", fixed, e);
  return r;
}

}  // namespace pql::coeffs
