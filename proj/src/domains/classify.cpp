#include <cmath>

#include "pql/domains/domains.hpp"

namespace pql::domains {

const char* status_id(Status s) {
  switch (s) {
    case Status::LiouvilleProven:
      return "liouville";
    case Status::LiouvilleBoundedOnly:
      return "bounded_only";
    case Status::RadialSolutionsExist:
      return "radial_exists";
    case Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

Verdict classify(const ParamPoint& pt, bool bounded, const RowSups& row) {
  const int n = pt.n;
  const double p = pt.p, q = pt.q, l = pt.l();
  if (!(q >= 0)) throw PreconditionError("classify needs q >= 0");
  if (n < 2) throw PreconditionError("classify needs n >= 2");

  Verdict v;
  const bool radial = n >= 3 && q < 1 && l >= curve_V(n, q);
  if (radial) v.fired.push_back("radial");

  std::vector<std::string> liouville, bounded_only;
  if (n == 2) {
    liouville.push_back("cond1");
  } else {
    if (q >= 5.0 / 3) liouville.push_back("cond2");
    if (q <= q_crit(n) && l < curve_V(n, q)) liouville.push_back("cond3");
    if (q > 0 && p + q <= (n + 2.0) / (n - 2)) liouville.push_back("cond4");
    if (p <= p_cond5(n)) liouville.push_back("cond5");
    Member inL = membership(AdmSet::L, pt, row);
    if (inL == Member::Yes) liouville.push_back("L");
    if (inL == Member::Boundary) v.boundary = true;
    if (bounded) {
      Member inBL = membership(AdmSet::BL, pt, row);
      if (inBL == Member::Yes) bounded_only.push_back("BL");
      if (inBL == Member::Boundary) v.boundary = true;
    }
  }
  if (bounded && q >= 1.5) bounded_only.push_back("bounded_q32");
  v.fired.insert(v.fired.end(), liouville.begin(), liouville.end());
  if (bounded) v.fired.insert(v.fired.end(), bounded_only.begin(), bounded_only.end());

  if (radial && !liouville.empty())
    throw InternalError("classifier overlap at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                        " q=" + std::to_string(q) + ": radial region meets " + liouville.front());
  if (radial) {
    v.status = Status::RadialSolutionsExist;
  } else if (!liouville.empty()) {
    v.status = Status::LiouvilleProven;
    v.criterion = liouville.front();
  } else if (bounded && !bounded_only.empty()) {
    v.status = Status::LiouvilleBoundedOnly;
    v.criterion = bounded_only.front();
  }
  return v;
}

Verdict classify(const ParamPoint& pt, bool bounded) { return classify(pt, bounded, row_sups(pt.n, pt.q)); }

}  // namespace pql::domains
