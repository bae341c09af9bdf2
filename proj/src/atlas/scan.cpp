#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>

#include "pql/atlas/atlas.hpp"

namespace pql::atlas {

using domains::ParamPoint;
using domains::SupTable;
using domains::Verdict;

Range parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("range must look like LO:HI, got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    Range r{std::stod(text.substr(0, colon), &a), std::stod(text.substr(colon + 1), &b)};
    if (a != colon || b != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
    return r;
  } catch (const std::exception&) {
    throw PreconditionError("range must look like LO:HI, got '" + text + "'");
  }
}

namespace {

constexpr int kCurveSamples = 400;

// Samples p = f(q) over the q range, splitting wherever f leaves the p range.
void trace(std::vector<Polyline>& out, const std::string& name, Range pr, Range qr, double q_lo, double q_hi,
           const std::function<std::optional<double>(double)>& f) {
  q_lo = std::max(q_lo, qr.lo);
  q_hi = std::min(q_hi, qr.hi);
  if (!(q_lo < q_hi)) return;
  Polyline cur{name, {}};
  auto flush = [&] {
    if (cur.pts.size() >= 2) out.push_back(cur);
    cur.pts.clear();
  };
  for (int k = 0; k <= kCurveSamples; ++k) {
    double q = q_lo + (q_hi - q_lo) * k / kCurveSamples;
    auto p = f(q);
    if (p && std::isfinite(*p) && *p >= pr.lo && *p <= pr.hi)
      cur.pts.emplace_back(*p, q);
    else
      flush();
  }
  flush();
}

// Real roots in p of a p^2 + b p + c.
std::pair<std::optional<double>, std::optional<double>> roots(double a, double b, double c) {
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) < 1e-300) return {};
    return {-c / b, std::nullopt};
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  double s = std::sqrt(disc);
  double r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
  return {std::min(r1, r2), std::max(r1, r2)};
}

}  // namespace

std::vector<Polyline> curve_overlays(int n, Range pr, Range qr, SupTable* memo) {
  std::vector<Polyline> out;
  if (n < 3) return out;
  SupTable local;
  SupTable& table = memo ? *memo : local;
  const double qc = domains::q_crit(n);

  trace(out, "V", pr, qr, 0, 1 - 1e-9, [&](double q) { return std::optional(domains::curve_V(n, q) + 1 - q); });
  auto g = [n](double q) {
    double a = ((n - 1.0) * (n - 1) * q + n - 2), b = n * (n - 1.0) * q * q - (n * n + n - 1.0) * q - n - 2,
           c = -n * q * q;
    return roots(a, b, c);
  };
  trace(out, "G=0", pr, qr, qr.lo, qr.hi, [&](double q) { return g(q).first; });
  trace(out, "G=0", pr, qr, qr.lo, qr.hi, [&](double q) { return g(q).second; });
  auto h = [n](double q) {
    double b = (n - 1.0) / (n - 2) * q - (n * n - 3.0) / ((n - 2.0) * (n - 2)), c = (1 - (n - 1.0) * q) / ((n - 2.0) * (n - 2));
    return roots(1, b, c);
  };
  trace(out, "H=0", pr, qr, qr.lo, qr.hi, [&](double q) { return h(q).first; });
  trace(out, "H=0", pr, qr, qr.lo, qr.hi, [&](double q) { return h(q).second; });
  trace(out, "p+q=(n+2)/(n-2)", pr, qr, qr.lo, qr.hi, [&](double q) { return std::optional((n + 2.0) / (n - 2) - q); });
  auto frontier = [&](domains::FeasSet set) {
    return [&table, n, set](double q) -> std::optional<double> {
      auto s = table.get(set, n, q);
      if (s.empty || s.plus_infinity) return std::nullopt;
      return s.value + 1 - q;
    };
  };
  trace(out, "L-frontier", pr, qr, qc + 1e-9, 1.5 - 1e-9, frontier(domains::FeasSet::D));
  trace(out, "H-frontier", pr, qr, 1 + 1e-9, 5.0 / 3 - 1e-9, frontier(domains::FeasSet::E));

  const std::pair<const char*, double> levels[] = {
      {"q=1-1/sqrt(n-1)", qc}, {"q=1", 1.0}, {"q=3/2", 1.5}, {"q=5/3", 5.0 / 3}, {"q=2", 2.0}};
  for (auto [name, q] : levels) {
    if (q < qr.lo || q > qr.hi) continue;
    out.push_back({name, {{pr.lo, q}, {pr.hi, q}}});
  }
  return out;
}

GridScan scan_grid(int n, Range p_range, Range q_range, int res_p, int res_q, bool bounded, const ScanOptions& opt) {
  if (n < 2) throw PreconditionError("scan needs n >= 2");
  if (!(p_range.lo < p_range.hi) || !(q_range.lo < q_range.hi)) throw PreconditionError("scan ranges must be non-degenerate");
  if (q_range.lo < 0) throw PreconditionError("q range must lie in [0, inf)");
  if (res_p < 2 || res_q < 2) throw PreconditionError("resolution must be at least 2 per axis");

  GridScan scan;
  scan.n = n;
  scan.bounded = bounded;
  scan.p_range = p_range;
  scan.q_range = q_range;
  scan.res_p = res_p;
  scan.res_q = res_q;
  scan.cells.resize(std::size_t(res_p) * res_q);

  SupTable local;
  SupTable* memo = opt.memo ? opt.memo : &local;
  std::vector<std::string> row_violations(res_q);
  std::vector<int> row_count(res_q, 0);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < res_q;) {
      const double q = scan.q_at(i);
      // suprema depend only on q: once per row
      domains::RowSups row = domains::row_sups(n, q, memo);
      for (int j = 0; j < res_p; ++j) {
        ParamPoint pt{n, scan.p_at(j), q};
        Verdict& v = scan.cells[std::size_t(i) * res_p + j];
        try {
          v = domains::classify(pt, bounded, row);
        } catch (const InternalError& e) {
          v = Verdict{};
          if (row_count[i]++ == 0) row_violations[i] = e.what();
        }
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, res_q);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // deterministic assembly of the audit
  for (int i = 0; i < res_q; ++i) {
    scan.disjointness_violations += row_count[i];
    if (row_count[i]) scan.violations.push_back(row_violations[i]);
  }
  scan.overlays = curve_overlays(n, p_range, q_range, memo);
  return scan;
}

}  // namespace pql::atlas
