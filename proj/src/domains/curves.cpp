#include <cmath>

#include "pql/domains/domains.hpp"

namespace pql::domains {

double q_crit(int n) { return 1.0 - 1.0 / std::sqrt(double(n - 1)); }

double p_cond5(int n) { return 3.0 * std::sqrt(double(n + 6)) / (2.0 * (n - 2)); }

double curve_V(int n, double q) {
  if (n < 3) throw PreconditionError("curve V needs n >= 3");
  if (!(q >= 0 && q < 1)) throw PreconditionError("curve V is defined for q in [0,1)");
  return (2 - q) * (2 - q) / ((1 - q) * (n - 2));
}

double G_bgv(int n, double p, double q) {
  if (n < 3) throw PreconditionError("G needs n >= 3");
  double a = (n - 1.0) * (n - 1.0) * q + n - 2;
  double b = n * (n - 1.0) * q * q - (double(n) * n + n - 1) * q - n - 2;
  return a * p * p + b * p - n * q * q;
}

double H_mawu(int n, double p, double q) {
  if (n < 3) throw PreconditionError("H needs n >= 3");
  double m = n - 2.0;
  return p * p + ((n - 1) / m * q - (double(n) * n - 3) / (m * m)) * p + (1 - (n - 1) * q) / (m * m);
}

}  // namespace pql::domains
