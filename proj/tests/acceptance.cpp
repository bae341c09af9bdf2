// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pql/atlas/atlas.hpp"
#include "pql/coeffs/coeffs.hpp"
#include "pql/domains/domains.hpp"
#include "pql/radial/radial.hpp"

namespace {

namespace cf = pql::coeffs;
namespace dom = pql::domains;
namespace rad = pql::radial;
namespace atl = pql::atlas;

// Tolerances, all pinned here.
constexpr double kReductionSeconds = 30;
constexpr double kPdeRel = 1e-10;
constexpr double kIdentityRel = 1e-8;
constexpr double kDeviationZero = 1e-10;
constexpr double kDeviationGeneric = 1e-3;
constexpr double kFSpread = 1e-10;
constexpr double kFSpreadControl = 1e-3;
constexpr double kThresholdSeconds = 60;
constexpr double kShootU1 = 1e-6;
constexpr double kScalingRel = 0.01;

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<double> log_radii(int count) {
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(0.1 * std::pow(100.0, double(i) / (count - 1)));
  return r;
}

const std::pair<int, double> kGroundStates[] = {{3, 0.5}, {4, 1.0 / 3}, {6, 0.25}};

Outcome c1() {
  auto t0 = std::chrono::steady_clock::now();
  cf::Report r = cf::verify_S_reduction(cf::Corpus::bundled());
  double t = seconds_since(t0);
  int pass = 0;
  for (const auto& c : r.checks) pass += c.ok;
  return {r.ok() && t <= kReductionSeconds,
          std::to_string(pass) + "/" + std::to_string(r.checks.size()) +
              " identities exact (S4=S5=S6=0, Si=(1-q/2)^3 Si), " + fmt("%.2f s", t)};
}

Outcome c2() {
  int cases = 0, ok = 0;
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; k <= 9; ++k) {
      cf::Rational q(k, 10);
      q.canonicalize();
      if (!(n - (n - 1) * q > 0)) continue;
      ++cases;
      ok += cf::critical_vanishing(n, q);
    }
  return {ok == cases, std::to_string(ok) + "/" + std::to_string(cases) + " (n,q) points vanish exactly"};
}

Outcome c3() {
  const auto& corpus = cf::Corpus::bundled();
  cf::Report rho = cf::verify_I_asymptotics(corpus, cf::Expansion::rho);
  cf::Report eps = cf::verify_I_asymptotics(corpus, cf::Expansion::epsilon);
  auto count = [](const cf::Report& r) {
    int k = 0;
    for (const auto& c : r.checks) k += c.ok;
    return std::to_string(k) + "/" + std::to_string(r.checks.size());
  };
  return {rho.ok() && eps.ok(), "rho claims " + count(rho) + ", epsilon claims " + count(eps)};
}

Outcome c4() {
  double worst = 0;
  for (auto [n, q] : kGroundStates) {
    auto f = rad::ClosedForm::ground_state(n, q);
    for (double r : log_radii(32)) worst = std::max(worst, rad::pde_residual_relative(f, r));
  }
  // analytic oracle at (3, 1/2): residual = (1 - 4K) r (K + r^3)^(-7/3)
  auto f = rad::ClosedForm::ground_state(3, 0.5);
  double oracle = 0;
  for (double r : log_radii(32)) {
    rad::Jet j = f.jet(r);
    double lap = j.d2u + 2 / r * j.du, want = -4 * f.K * r * std::pow(f.K + r * r * r, -7.0 / 3);
    oracle = std::max(oracle, std::abs(lap - want) / std::abs(want));
  }
  bool cancel = std::abs(1 - 4 * f.K) <= 1e-15;
  return {worst <= kPdeRel && oracle <= kPdeRel && cancel,
          "max relative residual " + fmt("%.2e", worst) + ", oracle Laplacian deviation " + fmt("%.2e", oracle) +
              ", 1-4K = " + fmt("%.1e", 1 - 4 * f.K)};
}

Outcome c5() {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> U(-3, 3);
  double worst = 0, zero = 0;
  for (auto [n, q] : kGroundStates) {
    for (int k = 0; k < 20; ++k) {
      double beta = U(rng), sigma = U(rng);
      for (double r : log_radii(32)) worst = std::max(worst, rad::deltaH_sides(n, q, beta, sigma, r).relative());
    }
    double beta = 2.0 / (n - 2), sigma = -q / (n - (n - 1) * q);
    for (double r : log_radii(32)) zero = std::max(zero, rad::tensor_deviation(n, q, beta, sigma, r));
  }
  double generic = rad::tensor_deviation(3, 0.5, 0, 0, 1);
  return {worst <= kIdentityRel && zero <= kDeviationZero && generic > kDeviationGeneric,
          "identity " + fmt("%.2e", worst) + ", deviation at optimal pair " + fmt("%.2e", zero) + ", at (0,0) " +
              fmt("%.4f", generic)};
}

Outcome c6() {
  auto rs = log_radii(16);
  double s1 = rad::relative_spread(rad::aux_F_profile(3, 0.5, rs));
  double s2 = rad::relative_spread(rad::aux_F_profile(6, 0.25, rs));
  double ctl = rad::relative_spread(rad::aux_F_profile(3, 0.5, rs, 1.1));
  return {s1 <= kFSpread && s2 <= kFSpread && ctl > kFSpreadControl,
          "spread " + fmt("%.2e", std::max(s1, s2)) + ", control with d*1.1 " + fmt("%.2e", ctl)};
}

Outcome c7() {
  struct Case {
    int n;
    double q, lo, hi, want, tol;
  };
  const Case cases[] = {{3, 0, 2, 8, 5, 0.1}, {4, 0, 2, 6, 3, 0.1}, {3, 0.25, 2, 9, 49.0 / 12 + 0.75, 0.15}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    double p = rad::existence_threshold(c.n, c.q, c.lo, c.hi, 1e-3);
    double t = seconds_since(t0);
    ok = ok && std::abs(p - c.want) <= c.tol && t <= kThresholdSeconds;
    detail += (detail.empty() ? "" : "; ") + std::string("(") + std::to_string(c.n) + "," + fmt("%g", c.q) +
              "): " + fmt("%.4f", p) + " vs " + fmt("%.4f", c.want) + fmt(" in %.2f s", t);
  }
  return {ok, detail};
}

Outcome c8() {
  bool ok = true;
  int failing = 0;
  for (int n = 3; n <= 10; ++n) {
    dom::ContainmentReport r = dom::containment_check(n, 0.01, 100);
    if (!r.ok()) {
      ok = false;
      ++failing;
      std::fputs(r.text().c_str(), stderr);
    }
  }
  return {ok, "frontier inequalities for n=3..10 and H<0 => L for n=4..10 (100x100 grid): " + std::to_string(failing) + " failing n"};
}

Outcome c9() {
  const atl::Range pr{-1, 4}, qr{0, 2};
  auto scan = atl::scan_grid(6, pr, qr, 400, 400, false);
  auto bscan = atl::scan_grid(6, pr, qr, 400, 400, true);
  const double cell = (pr.hi - pr.lo) / 400;

  // transition along the first row and along q = 0 itself
  auto transition = [&](const std::function<dom::Status(int)>& status) -> double {
    for (int j = 1; j < 400; ++j)
      if (status(j - 1) == dom::Status::LiouvilleProven && status(j) == dom::Status::RadialSolutionsExist)
        return (scan.p_at(j - 1) + scan.p_at(j)) / 2;
    return NAN;
  };
  double t_row = transition([&](int j) { return scan.at(0, j).status; });
  double t_axis = transition([&](int j) { return dom::classify({6, scan.p_at(j), 0.0}, false).status; });
  bool trans_ok = std::abs(t_row - 2) <= cell && std::abs(t_axis - 2) <= cell;

  int bad_high = 0, bad_bounded = 0;
  for (int i = 0; i < 400; ++i)
    for (int j = 0; j < 400; ++j) {
      if (scan.q_at(i) >= 5.0 / 3 && scan.at(i, j).status != dom::Status::LiouvilleProven) ++bad_high;
      auto s = bscan.at(i, j).status;
      if (bscan.q_at(i) >= 1.5 && s != dom::Status::LiouvilleProven && s != dom::Status::LiouvilleBoundedOnly)
        ++bad_bounded;
    }
  int violations = scan.disjointness_violations + bscan.disjointness_violations;

  auto golden_scan = atl::scan_grid(6, pr, qr, 200, 200, false);
  std::ostringstream now;
  atl::emit_csv(golden_scan, now);
  std::ifstream g(PQL_GOLDEN_CSV, std::ios::binary);
  std::stringstream want;
  want << g.rdbuf();
  bool golden = g && now.str() == want.str();

  return {trans_ok && bad_high == 0 && bad_bounded == 0 && violations == 0 && golden,
          "transition at p=" + fmt("%.4f", t_row) + " (row) / " + fmt("%.4f", t_axis) + " (q=0), cell " +
              fmt("%.4f", cell) + "; non-Liouville cells q>=5/3: " + std::to_string(bad_high) +
              "; bounded q>=3/2 misses: " + std::to_string(bad_bounded) + "; overlaps: " + std::to_string(violations) +
              "; golden " + (golden ? "identical" : "DIFFERS")};
}

Outcome c10() {
  rad::ShootOptions opt;
  opt.probes = {1.0};
  auto o = rad::shoot(3, 5, 0, 1, 50, 1e-10, opt);
  double err = o.probe_values.empty() ? INFINITY : std::abs(o.probe_values[0] - 1 / std::sqrt(4.0 / 3));
  auto a = rad::shoot(3, 3, 0, 1, 50, 1e-10), b = rad::shoot(3, 3, 0, 2, 50, 1e-10);
  // u0 -> 2 u0 is lambda = 2^(l/(2-q)) = 2, radii scale by 1/lambda
  double ratio = b.radius / a.radius, want = 0.5;
  bool scaling = a.status == rad::RadialOutcome::Status::HitsZero && b.status == a.status &&
                 std::abs(ratio - want) <= kScalingRel * want;
  return {o.status == rad::RadialOutcome::Status::PositiveGlobal && err <= kShootU1 && scaling,
          "|u(1) - (4/3)^(-1/2)| = " + fmt("%.2e", err) + ", zero-radius ratio " + fmt("%.6f", ratio) + " vs 0.5"};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"exact reduction identities", c1},
      {"critical parameter vanishing", c2},
      {"expansion coefficients", c3},
      {"ground-state PDE residual", c4},
      {"Delta H identity and tensor deviation", c5},
      {"constancy of F", c6},
      {"radial existence thresholds", c7},
      {"containment inequalities", c8},
      {"atlas anchors and golden snapshot", c9},
      {"shooting oracle and scaling", c10},
  };
  int failed = 0, index = 0;
  for (auto [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s  criterion %2d  %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
