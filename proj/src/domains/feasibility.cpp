#include <bit>
#include <cmath>
#include <limits>

#include "pql/domains/domains.hpp"

namespace pql::domains {
namespace {

constexpr double kGridStep = 1e-3;
constexpr int kGridCells = 2000;

}  // namespace

const char* to_string(FeasSet s) { return s == FeasSet::D ? "D" : "E"; }

double phi(int n, double q, double y) {
  double m = n - 2.0;
  return (2 - q) / m + (y * m + 2) / (m * (2 - y));
}

bool feasibility(FeasSet set, int n, double q, double y) {
  if (n < 3) throw PreconditionError("feasibility needs n >= 3");
  if (!(y > 0 && y < 2)) throw PreconditionError("feasibility needs y in (0,2)");
  double x = (2 - n * y) / (2.0 * (n - 1));
  double c = 2 * (x + 1) * (x + 1) / n + y * (q - 2 * x - 1) - q * y * y / 2 - 2 * x * x;
  double lin = 2 * y * (1 / (std::sqrt(double(n)) + 1) + x);
  if (!(lin + q * y * y > kFeasGuard)) return false;
  if (!(c > kFeasGuard)) return false;
  double quad = set == FeasSet::D ? (q - 1) : (1.5 * q - 2);
  return 4 * c + lin + quad * y * y > kFeasGuard;
}

SupResult sup_phi(FeasSet set, int n, double q, double tol) {
  if (!(tol > 0)) throw PreconditionError("sup_phi needs tol > 0");
  if (n < 3) throw PreconditionError("sup_phi needs n >= 3");
  if (set == FeasSet::D && !(q > q_crit(n) && q < 1.5))
    throw PreconditionError("sup over D is defined for q in (1-1/sqrt(n-1), 3/2)");
  if (set == FeasSet::E && !(q > 1 && q < 5.0 / 3))
    throw PreconditionError("sup over E is defined for q in (1, 5/3)");

  SupResult r;
  int top = 0;
  for (int k = kGridCells - 1; k >= 1; --k) {
    if (feasibility(set, n, q, k * kGridStep)) {
      ++r.grid_cells_feasible;
      if (top == 0) top = k;
    }
  }
  if (top == 0) {
    r.empty = true;
    r.value = -std::numeric_limits<double>::infinity();
    return r;
  }

  double lo = top * kGridStep, hi = (top + 1) * kGridStep;
  if (top == kGridCells - 1) {
    // Feasible right up to the last cell: probe the approach to y = 2.
    bool all = true;
    for (int j = 4; j <= 12; ++j) {
      double y = 2 - std::pow(10.0, -j);
      if (feasibility(set, n, q, y)) {
        lo = y;
      } else {
        hi = y;
        all = false;
        break;
      }
    }
    if (all) {
      r.plus_infinity = true;
      r.value = std::numeric_limits<double>::infinity();
      r.argmax_y = 2;
      return r;
    }
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (feasibility(set, n, q, mid))
      lo = mid;
    else
      hi = mid;
  }
  r.argmax_y = lo;
  r.value = phi(n, q, lo);
  r.attained = true;
  return r;
}

SupTable::Key SupTable::key(FeasSet set, int n, double q) {
  return {int(set), n, std::bit_cast<std::uint64_t>(q)};
}

SupResult SupTable::get(FeasSet set, int n, double q, double tol) {
  {
    std::lock_guard lock(mu_);
    auto it = table_.find(key(set, n, q));
    if (it != table_.end() && it->second.tol <= tol) return it->second.sup;
  }
  SupResult r = sup_phi(set, n, q, tol);
  insert({set, n, q, tol, r});
  return r;
}

void SupTable::insert(const Record& r) {
  std::lock_guard lock(mu_);
  auto [it, fresh] = table_.try_emplace(key(r.set, r.n, r.q), r);
  if (!fresh && r.tol < it->second.tol) it->second = r;
}

std::vector<SupTable::Record> SupTable::records() const {
  std::lock_guard lock(mu_);
  std::vector<Record> out;
  for (const auto& [k, v] : table_) out.push_back(v);
  return out;
}

std::size_t SupTable::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

}  // namespace pql::domains
