#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pql/domains/domains.hpp"

namespace pql::domains {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void record(InequalityResult& r, double margin) {
  ++r.samples;
  if (!(margin > 0)) ++r.failures;
  if (r.samples == 1 || margin < r.worst_margin) r.worst_margin = margin;
}

// q grid points k*step strictly inside (lo, hi), optionally including hi.
std::vector<double> q_grid(double lo, double hi, double step, bool include_hi) {
  std::vector<double> qs;
  for (long k = 1;; ++k) {
    double q = k * step;
    if (q > hi + 1e-12) break;
    if (q <= lo) continue;
    if (std::abs(q - hi) < 1e-12) {
      if (include_hi) qs.push_back(hi);
      break;
    }
    qs.push_back(q);
  }
  return qs;
}

// Larger root of p -> H(p,q), or nullopt when the quadratic has no real root.
std::optional<double> h_root(int n, double q) {
  double b = (n - 1.0) / (n - 2) * q - (n * n - 3.0) / ((n - 2.0) * (n - 2));
  double c = (1 - (n - 1.0) * q) / ((n - 2.0) * (n - 2));
  double disc = b * b - 4 * c;
  if (disc < 0) return std::nullopt;
  return (-b + std::sqrt(disc)) / 2;
}

}  // namespace

bool ContainmentReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const InequalityResult& r) { return r.ok(); });
}

std::string ContainmentReport::text() const {
  std::ostringstream os;
  os << "containment checks, n=" << n << "\n";
  for (const auto& r : items) {
    os << "  " << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  samples=" << r.samples
       << " failures=" << r.failures << " worst_margin=" << r.worst_margin << "\n";
  }
  return os.str();
}

ContainmentReport containment_check(int n, double q_step, int b2_grid) {
  if (n < 3) throw PreconditionError("containment check needs n >= 3");
  if (!(q_step > 0)) throw PreconditionError("q_step must be positive");
  if (b2_grid < 2) throw PreconditionError("b2 grid must have at least 2 cells per axis");

  ContainmentReport rep;
  rep.n = n;
  SupTable memo;
  const double qc = q_crit(n), P5 = p_cond5(n);
  auto value = [](const SupResult& s) { return s.plus_infinity ? kInf : s.value; };

  InequalityResult a1{"q in (q_crit,1]: L+1-q > p5", 0, 0, 0}, a2{"q in (q_crit,1]: L > 4/(n-2)", 0, 0, 0};
  for (double q : q_grid(qc, 1.0, q_step, true)) {
    double L = value(memo.get(FeasSet::D, n, q));
    record(a1, L + 1 - q - P5);
    record(a2, L - 4.0 / (n - 2));
  }
  InequalityResult b{"q in (1,5/3):    H+1-q > p5", 0, 0, 0};
  for (double q : q_grid(1.0, 5.0 / 3, q_step, false)) record(b, value(memo.get(FeasSet::E, n, q)) + 1 - q - P5);
  InequalityResult c{"q in (0,q_crit]: p5+q-1 < l_V", 0, 0, 0};
  for (double q : q_grid(0.0, qc, q_step, true)) record(c, curve_V(n, q) - (P5 + q - 1));
  rep.items = {a1, a2, b, c};

  if (n >= 4) {
    // Cell centres of (q_crit, 5/3) x (0, p_top), where p_top bounds the region H < 0.
    const double q_hi = 5.0 / 3;
    double p_top = 0;
    for (int j = 0; j <= 4 * b2_grid; ++j) {
      if (auto r = h_root(n, qc + (q_hi - qc) * j / (4.0 * b2_grid))) p_top = std::max(p_top, *r);
    }
    InequalityResult b2{"q in (q_crit,5/3), H<0: in L", 0, 0, 0};
    for (int i = 0; i < b2_grid; ++i) {
      double q = qc + (q_hi - qc) * (i + 0.5) / b2_grid;
      RowSups row;
      if (q < 1.5) row.L = memo.get(FeasSet::D, n, q);
      if (q > 1) row.H = memo.get(FeasSet::E, n, q);
      for (int j = 0; j < b2_grid; ++j) {
        double p = p_top * (j + 0.5) / b2_grid;
        ParamPoint pt{n, p, q};
        if (pt.l() <= 0 || H_mawu(n, p, q) >= 0) continue;
        // margin: distance below whichever frontier decides membership
        double frontier = q <= 1 ? value(*row.L) : value(*row.H);
        double margin = frontier - pt.l();
        if (membership(AdmSet::L, pt, row) != Member::Yes) margin = std::min(margin, 0.0);
        record(b2, margin);
      }
    }
    rep.items.push_back(b2);
  }
  return rep;
}

}  // namespace pql::domains
