#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pql/common.hpp"

namespace pql::domains {

/// Strict inequalities of the feasibility systems must clear this margin.
inline constexpr double kFeasGuard = 1e-12;
/// l within this distance of a frontier value is reported as boundary.
inline constexpr double kBoundaryTol = 1e-9;
/// Tolerance used for admissible-set suprema.
inline constexpr double kSupTol = 1e-9;

struct ParamPoint {
  int n = 3;
  double p = 0, q = 0;
  double l() const { return p + q - 1; }
};

double q_crit(int n);  // 1 - 1/sqrt(n-1)
double p_cond5(int n);  // 3 sqrt(n+6) / (2(n-2))

double curve_V(int n, double q);
double G_bgv(int n, double p, double q);
double H_mawu(int n, double p, double q);

enum class FeasSet { D, E };
const char* to_string(FeasSet s);

double phi(int n, double q, double y);
bool feasibility(FeasSet set, int n, double q, double y);

struct SupResult {
  double value = 0;          // phi at argmax_y; +inf / -inf per flags
  double argmax_y = 0;
  bool attained = false;
  bool plus_infinity = false;  // feasible y accumulate at 2
  bool empty = false;          // no feasible y at all
  int grid_cells_feasible = 0;
};

SupResult sup_phi(FeasSet set, int n, double q, double tol);

/// Memo of suprema keyed by (set, n, q). Thread-safe; records computed with a
/// looser tolerance than requested are recomputed.
class SupTable {
 public:
  struct Record {
    FeasSet set;
    int n;
    double q;
    double tol;
    SupResult sup;
  };

  SupResult get(FeasSet set, int n, double q, double tol = kSupTol);
  void insert(const Record& r);
  std::vector<Record> records() const;
  std::size_t size() const;

 private:
  using Key = std::tuple<int, int, std::uint64_t>;
  static Key key(FeasSet set, int n, double q);
  mutable std::mutex mu_;
  std::map<Key, Record> table_;
};

/// Suprema needed to decide membership along one q-row.
struct RowSups {
  std::optional<SupResult> L;  // over D, when q in (q_crit, 3/2)
  std::optional<SupResult> H;  // over E, when q in (1, 5/3)
};
RowSups row_sups(int n, double q, SupTable* memo = nullptr);

enum class AdmSet { A, B, BL, L };
enum class Member { Yes, No, Boundary };

Member membership(AdmSet set, const ParamPoint& pt, const RowSups& row);
Member membership(AdmSet set, const ParamPoint& pt);
bool in_admissible(AdmSet set, const ParamPoint& pt);

enum class Status { LiouvilleProven, LiouvilleBoundedOnly, RadialSolutionsExist, Unknown };
const char* status_id(Status s);  // liouville, bounded_only, radial_exists, unknown

struct Verdict {
  Status status = Status::Unknown;
  std::string criterion;               // the criterion that decided the status
  std::vector<std::string> fired;      // every satisfied criterion
  bool boundary = false;               // some frontier test fell inside the guard band
};

Verdict classify(const ParamPoint& pt, bool bounded, const RowSups& row);
Verdict classify(const ParamPoint& pt, bool bounded);

struct InequalityResult {
  std::string name;
  int samples = 0;
  int failures = 0;
  double worst_margin = 0;  // min over samples of (lhs - rhs) for ">" checks
  bool ok() const { return failures == 0 && samples > 0; }
};

struct ContainmentReport {
  int n = 0;
  std::vector<InequalityResult> items;
  bool ok() const;
  std::string text() const;
};

ContainmentReport containment_check(int n, double q_step, int b2_grid = 100);

}  // namespace pql::domains
