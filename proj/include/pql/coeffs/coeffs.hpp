#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pql/cas/expr.hpp"
#include "pql/common.hpp"

namespace pql::coeffs {

using cas::RatExpr;
using cas::Rational;

// A(x) = (2/n)(1+x)^2 - 2x^2 and B(x,y) = (4/n)(1+x)(1+y) - 4xy - 2l.
RatExpr A_func(const RatExpr& x, const RatExpr& n);
RatExpr B_func(const RatExpr& x, const RatExpr& y, const RatExpr& n, const RatExpr& l);
Rational A_func(const Rational& x, const Rational& n);
Rational B_func(const Rational& x, const Rational& y, const Rational& n, const Rational& l);
double A_func(double x, double n);
double B_func(double x, double y, double n, double l);

/// Named definitions from a formula file, in file order.
class Corpus {
 public:
  static Corpus load(const std::string& path);
  /// $PQL_FORMULA_FILE if set, else the bundled formulas/appendixA.txt.
  static const Corpus& bundled();
  static std::string default_path();

  bool has(const std::string& name) const { return defs_.count(name) > 0; }
  const RatExpr& get(const std::string& name) const;
  const std::vector<std::string>& names() const { return order_; }
  /// Raw right-hand side text as written in the file.
  const std::string& source(const std::string& name) const { return text_.at(name); }

 private:
  std::map<std::string, RatExpr> defs_;
  std::map<std::string, std::string> text_;
  std::vector<std::string> order_;
};

enum class SystemName { S_full, S_reduced, I_full };

struct CoeffSystem {
  SystemName name;
  std::vector<RatExpr> entries;
};

CoeffSystem corpus_system(const Corpus& c, SystemName name);
/// Independent transcription typed directly as C++ expressions.
CoeffSystem handcoded_system(SystemName name);

std::string system_label(SystemName name, std::size_t index);

struct Check {
  std::string name;
  bool ok = false;
  std::string residual;  // nonzero residual or mismatch detail
  bool info = false;     // reported, but not part of pass/fail
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  bool ok() const;
  std::string text() const;
  std::string json() const;
};

Report verify_transcription(const Corpus& c);
Report verify_S_reduction(const Corpus& c);

enum class Expansion { rho, epsilon };
Report verify_I_asymptotics(const Corpus& c, Expansion var);

/// The weight d that makes F constant on the critical ground state:
/// (1-q)(n-2)/(n-(n-1)q).
Rational critical_d(int n, const Rational& q);
/// The variant weight (n-2)/((1-q)(n-(n-1)q)); it does not give constancy.
Rational variant_critical_d(int n, const Rational& q);

/// Values of S_1..S_6 at the critical parameter point with the given d.
std::vector<Rational> critical_values(int n, const Rational& q, const Rational& d);
bool critical_vanishing(int n, const Rational& q);
/// Critical vanishing over a grid, plus an informational line for the variant weight.
Report critical_vanishing_report(const std::vector<int>& ns, const std::vector<Rational>& qs);

struct Witness {
  Rational beta, d, sigma, theta;
  Rational S1, S2, S3;
};

/// Values of the reduced S1, S2, S3.
std::vector<Rational> reduced_S(int n, const Rational& l, const Rational& q, const Rational& beta,
                                const Rational& d, const Rational& sigma);

std::optional<Witness> positivity_witness(int n, const Rational& p, const Rational& q);

/// Simplification of A(sigma) + (q-1-2sigma)theta - (q/2)theta^2 under
/// sigma = (2 - n theta)/(2(n-1)).
RatExpr s3_expression();
Report s3_quadratic_check();

}  // namespace pql::coeffs
