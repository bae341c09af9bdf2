#include "pql/coeffs/coeffs.hpp"

namespace pql::coeffs {

RatExpr A_func(const RatExpr& x, const RatExpr& n) {
  return RatExpr(2L) / n * pow(1L + x, 2) - 2L * pow(x, 2);
}

RatExpr B_func(const RatExpr& x, const RatExpr& y, const RatExpr& n, const RatExpr& l) {
  return RatExpr(4L) / n * (1L + x) * (1L + y) - 4L * x * y - 2L * l;
}

Rational A_func(const Rational& x, const Rational& n) {
  if (n == 0) throw PreconditionError("A: n = 0");
  Rational r = Rational(2) / n * (1 + x) * (1 + x) - 2 * x * x;
  return r;
}

Rational B_func(const Rational& x, const Rational& y, const Rational& n, const Rational& l) {
  if (n == 0) throw PreconditionError("B: n = 0");
  Rational r = Rational(4) / n * (1 + x) * (1 + y) - 4 * x * y - 2 * l;
  return r;
}

double A_func(double x, double n) {
  if (n == 0) throw PreconditionError("A: n = 0");
  return 2.0 / n * (1 + x) * (1 + x) - 2 * x * x;
}

double B_func(double x, double y, double n, double l) {
  if (n == 0) throw PreconditionError("B: n = 0");
  return 4.0 / n * (1 + x) * (1 + y) - 4 * x * y - 2 * l;
}

}  // namespace pql::coeffs
