#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "pql/radial/radial.hpp"

using namespace pql::radial;

namespace {
std::vector<double> log_radii(int count, double lo = 0.1, double hi = 10) {
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(lo * std::pow(hi / lo, double(i) / (count - 1)));
  return r;
}
}  // namespace

TEST_CASE("ground state n=3, q=1/2") {
  ClosedForm f = ClosedForm::ground_state(3, 0.5);
  CHECK(f.K == doctest::Approx(0.25));
  CHECK(f.p == doctest::Approx(5));
  DerivedQuantities d0 = ground_state_eval(3, 0.5, 0);
  CHECK(d0.u == doctest::Approx(std::cbrt(4.0)));
  DerivedQuantities d1 = ground_state_eval(3, 0.5, 1);
  CHECK(d1.u == doctest::Approx(std::pow(1.25, -1.0 / 3)));
  CHECK(d1.du < 0);
  CHECK(d1.Z == doctest::Approx(d1.L / d1.H));
  CHECK_THROWS_AS(ground_state_eval(3, 0.5, -1), pql::PreconditionError);
  CHECK_THROWS_AS(ground_state_eval(3, 1.0, 1), pql::PreconditionError);
  CHECK_THROWS_AS(ground_state_eval(2, 0.5, 1), pql::PreconditionError);
}

TEST_CASE("ground state residual against the analytic oracle") {
  // n=3, q=1/2: residual = (1 - 4K) r (K + r^3)^(-7/3), so it vanishes at K = 1/4
  ClosedForm f = ClosedForm::ground_state(3, 0.5);
  for (double r : log_radii(32)) {
    Jet j = f.jet(r);
    double lap = j.d2u + 2 / r * j.du;
    CHECK(lap == doctest::Approx(-4 * f.K * r * std::pow(f.K + r * r * r, -7.0 / 3)).epsilon(1e-12));
    CHECK(pde_residual_relative(f, r) <= 1e-10);
  }
  CHECK_THROWS_AS(pde_residual_radial(f, 0), pql::PreconditionError);
}

TEST_CASE("ground state is positive and decreasing") {
  for (auto [n, q] : {std::pair{3, 0.5}, {4, 1.0 / 3}, {6, 0.25}, {10, 0.05}})
    for (double r : log_radii(20, 1e-3, 1e3)) {
      auto d = ground_state_eval(n, q, r);
      CHECK(d.u > 0);
      CHECK(d.du < 0);
    }
}

TEST_CASE("constant and singular solutions") {
  CHECK(pde_residual_radial(ClosedForm::constant(3, 2, 0.5, 1.7), 1.0) == 0);
  CHECK(pde_residual_radial(ClosedForm::constant(3, 2, 0, 1.7), 1.0) == doctest::Approx(1.7 * 1.7));
  CHECK(singular_amplitude(4, 3, 0) == doctest::Approx(1));
  CHECK(singular_amplitude(3, 5, 0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK_THROWS_AS(singular_amplitude(3, 2, 0.5), pql::PreconditionError);
  CHECK(std::abs(pde_residual_radial(ClosedForm::singular(4, 3, 0), 2)) <= 1e-12);
  for (auto [n, p, q] : {std::tuple{3, 5.0, 0.0}, std::tuple{5, 2.0, 0.7}, std::tuple{8, 1.1, 1.5}, std::tuple{6, 3.0, 0.25}})
    for (double r : log_radii(10)) CHECK(pde_residual_relative(ClosedForm::singular(n, p, q), r) <= 1e-10);
}

TEST_CASE("Delta H identity for random parameters") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(-3, 3);
  for (auto [n, q] : {std::pair{3, 0.5}, {4, 1.0 / 3}, {6, 0.25}})
    for (int k = 0; k < 20; ++k) {
      double beta = U(rng), sigma = U(rng);
      for (double r : {0.1, 0.3, 1.0, 2.0, 10.0}) CHECK(deltaH_sides(n, q, beta, sigma, r).relative() <= 1e-8);
    }
  CHECK(std::abs(deltaH_residual(3, 0.5, 0, 0, 1)) < 1e-8);
}

TEST_CASE("tensor deviation") {
  for (auto [n, q] : {std::pair{3, 0.5}, {4, 1.0 / 3}, {6, 0.25}})
    for (double r : log_radii(8)) {
      double beta = 2.0 / (n - 2), sigma = -q / (n - (n - 1) * q);
      CHECK(tensor_deviation(n, q, beta, sigma, r) <= 1e-10);
      CHECK(tensor_deviation(n, q, 0.3, -0.8, r) >= 0);
    }
  CHECK(tensor_deviation(3, 0.5, 0, 0, 1) > 1e-3);
}

TEST_CASE("F is constant on the critical ground state") {
  auto rs = log_radii(16);
  CHECK(relative_spread(aux_F_profile(3, 0.5, rs)) <= 1e-10);
  CHECK(relative_spread(aux_F_profile(6, 0.25, rs)) <= 1e-10);
  CHECK(relative_spread(aux_F_profile(3, 0.5, rs, 1.1)) > 1e-3);
  CHECK_THROWS_AS(aux_F_profile(3, 0.5, {1.0, 0.0}), pql::PreconditionError);
  // matches the F stored in DerivedQuantities
  CHECK(aux_F_profile(4, 0.2, {1.5})[0] == doctest::Approx(ground_state_eval(4, 0.2, 1.5).F));
}

TEST_CASE("shooting: Lane-Emden anchors") {
  RadialOutcome sub = shoot(3, 3, 0, 1, 50, 1e-10);
  CHECK(sub.status == RadialOutcome::Status::HitsZero);
  CHECK(sub.radius == doctest::Approx(6.896848619).epsilon(1e-7));  // first zero of the index-3 polytrope

  ShootOptions opt;
  opt.probes = {0.5, 1.0, 4.0};
  RadialOutcome crit = shoot(3, 5, 0, 1, 50, 1e-10, opt);
  CHECK(crit.status == RadialOutcome::Status::PositiveGlobal);
  REQUIRE(crit.probe_values.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(crit.probe_values[i] - 1 / std::sqrt(1 + opt.probes[i] * opt.probes[i] / 3)) <= 1e-6);

  CHECK(shoot(3, 7, 0, 1, 50, 1e-10).status == RadialOutcome::Status::PositiveGlobal);
}

TEST_CASE("shooting against a fixed-step oracle") {
  // classical RK4 with a tiny step, started from the same series
  const int n = 3;
  const double p = 3, h = 1e-4;
  double r = 1e-4, u = 1 - r * r / 6, v = -r / 3;
  auto acc = [&](double rr, double uu, double vv) { return -(n - 1) / rr * vv - std::pow(std::max(uu, 0.0), p); };
  while (u > 0) {
    double k1u = v, k1v = acc(r, u, v);
    double k2u = v + h / 2 * k1v, k2v = acc(r + h / 2, u + h / 2 * k1u, v + h / 2 * k1v);
    double k3u = v + h / 2 * k2v, k3v = acc(r + h / 2, u + h / 2 * k2u, v + h / 2 * k2v);
    double k4u = v + h * k3v, k4v = acc(r + h, u + h * k3u, v + h * k3v);
    double un = u + h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
    if (un <= 0) {
      r += h * u / (u - un);
      break;
    }
    v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    u = un;
    r += h;
  }
  CHECK(shoot(n, p, 0, 1, 50, 1e-10).radius == doctest::Approx(r).epsilon(1e-6));
}

TEST_CASE("shooting: scaling invariance") {
  for (auto [n, p, q] : {std::tuple{3, 3.0, 0.0}, std::tuple{4, 2.0, 0.0}, std::tuple{3, 2.5, 0.5}}) {
    RadialOutcome a = shoot(n, p, q, 1, 200, 1e-10), b = shoot(n, p, q, 2, 200, 1e-10);
    REQUIRE(a.status == RadialOutcome::Status::HitsZero);
    REQUIRE(b.status == RadialOutcome::Status::HitsZero);
    double lambda = std::pow(2.0, (p + q - 1) / (2 - q));
    CHECK(b.radius / a.radius == doctest::Approx(1 / lambda).epsilon(0.01));
  }
}

TEST_CASE("shooting: inputs and the q >= 1 case") {
  CHECK_THROWS_AS(shoot(3, 3, 0, 1, 50, 0), pql::PreconditionError);
  CHECK_THROWS_AS(shoot(3, 3, 0, -1, 50, 1e-8), pql::PreconditionError);
  CHECK_THROWS_AS(shoot(3, 3, 0, 1, 0, 1e-8), pql::PreconditionError);
  RadialOutcome o = shoot(3, 3, 1.2, 1, 50, 1e-8);
  CHECK(o.status == RadialOutcome::Status::Undecided);
  CHECK_FALSE(o.reason.empty());
}

TEST_CASE("existence threshold") {
  CHECK(existence_threshold(3, 0, 2, 8, 1e-3) == doctest::Approx(5).epsilon(0.02));
  CHECK(existence_threshold(4, 0, 2, 6, 1e-3) == doctest::Approx(3).epsilon(0.03));
  CHECK(std::abs(existence_threshold(3, 0.25, 2, 9, 1e-3) - (49.0 / 12 + 0.75)) <= 0.15);
  CHECK_THROWS_AS(existence_threshold(3, 0, 6, 8, 1e-3), pql::PreconditionError);
  CHECK_THROWS_AS(existence_threshold(3, 1.0, 2, 8, 1e-3), pql::PreconditionError);
}
