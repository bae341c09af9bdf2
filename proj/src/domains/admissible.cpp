#include <cmath>

#include "pql/domains/domains.hpp"

namespace pql::domains {
namespace {

// Three-valued "l < bound".
Member less_than(double l, double bound) {
  if (std::isinf(bound)) return bound > 0 ? Member::Yes : Member::No;
  double gap = bound - l;
  if (gap > kBoundaryTol) return Member::Yes;
  if (gap < -kBoundaryTol) return Member::No;
  return Member::Boundary;
}

Member either(Member a, Member b) {
  if (a == Member::Yes || b == Member::Yes) return Member::Yes;
  if (a == Member::Boundary || b == Member::Boundary) return Member::Boundary;
  return Member::No;
}

bool in_A_range(int n, double q) { return q > q_crit(n) && q < 1.5; }
bool in_B_range(double q) { return q > 1 && q < 5.0 / 3; }

double sup_value(const std::optional<SupResult>& s, FeasSet set, int n, double q) {
  return s ? s->value : sup_phi(set, n, q, kSupTol).value;
}

}  // namespace

RowSups row_sups(int n, double q, SupTable* memo) {
  RowSups r;
  if (n < 3) return r;
  if (in_A_range(n, q)) r.L = memo ? memo->get(FeasSet::D, n, q) : sup_phi(FeasSet::D, n, q, kSupTol);
  if (in_B_range(q)) r.H = memo ? memo->get(FeasSet::E, n, q) : sup_phi(FeasSet::E, n, q, kSupTol);
  return r;
}

Member membership(AdmSet set, const ParamPoint& pt, const RowSups& row) {
  const int n = pt.n;
  const double q = pt.q, l = pt.l();
  if (n < 3) throw PreconditionError("admissible sets are defined for n >= 3");
  switch (set) {
    case AdmSet::A:
      if (!in_A_range(n, q)) return Member::No;
      return less_than(l, sup_value(row.L, FeasSet::D, n, q));
    case AdmSet::B:
      if (!in_B_range(q)) return Member::No;
      return less_than(l, sup_value(row.H, FeasSet::E, n, q));
    case AdmSet::BL: {
      if (q >= 1.5) return Member::Yes;
      Member low = (q >= 0 && q <= q_crit(n)) ? less_than(l, curve_V(n, q)) : Member::No;
      return either(membership(AdmSet::A, pt, row), low);
    }
    case AdmSet::L: {
      if (q >= 5.0 / 3) return Member::Yes;
      Member low = (q >= 0 && q <= 1) ? membership(AdmSet::BL, pt, row) : Member::No;
      return either(membership(AdmSet::B, pt, row), low);
    }
  }
  return Member::No;
}

Member membership(AdmSet set, const ParamPoint& pt) {
  if (pt.n < 3) throw PreconditionError("admissible sets are defined for n >= 3");
  return membership(set, pt, row_sups(pt.n, pt.q));
}

bool in_admissible(AdmSet set, const ParamPoint& pt) { return membership(set, pt) == Member::Yes; }

}  // namespace pql::domains
