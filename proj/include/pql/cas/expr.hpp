#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pql/cas/poly.hpp"

namespace pql::cas {

class RatExpr;

namespace detail {
enum class Kind { Const, Var, Sum, Product, Pow, Quotient };

struct Node {
  Kind kind;
  Rational value;                 // Const
  SymbolId sym = 0;               // Var
  long exponent = 0;              // Pow
  std::vector<std::shared_ptr<const Node>> kids;

  mutable std::once_flag canon_once;
  mutable std::optional<RatFunc> canon;
};
}  // namespace detail

/// Immutable expression tree with a lazily cached canonical rational function.
/// Copies share the underlying node; safe to use from several threads.
class RatExpr {
 public:
  RatExpr();  // the constant 0
  RatExpr(Rational c);  // NOLINT implicit
  RatExpr(long c);      // NOLINT implicit
  static RatExpr var(const std::string& name);
  static RatExpr var(SymbolId id);

  static RatExpr sum(std::vector<RatExpr> terms);
  static RatExpr product(std::vector<RatExpr> factors);
  static RatExpr quotient(RatExpr num, RatExpr den);
  static RatExpr power(RatExpr base, long e);
  /// Tree for an already-canonical rational function; the cache is pre-seeded.
  static RatExpr from_ratfunc(const RatFunc& f);

  detail::Kind kind() const { return node_->kind; }
  const RatFunc& canon() const;
  bool is_zero() const { return canon().is_zero(); }
  /// Value when the canonical form is a constant.
  std::optional<Rational> as_constant() const;

  std::string str() const;

  const detail::Node* node() const { return node_.get(); }
  const std::shared_ptr<const detail::Node>& ptr() const { return node_; }
  explicit RatExpr(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b) { return sum({a, b}); }
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b) { return sum({a, product({RatExpr(-1), b})}); }
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b) { return product({a, b}); }
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b) { return quotient(a, b); }
  RatExpr operator-() const { return product({RatExpr(-1), *this}); }

 private:
  std::shared_ptr<const detail::Node> node_;
};

inline RatExpr pow(const RatExpr& b, long e) { return RatExpr::power(b, e); }

using NamedBindings = std::map<std::string, Rational>;

/// Exact evaluation of the tree. Throws EvalError naming the unbound variable
/// or the sub-expression whose denominator vanishes.
Rational eval_rational(const RatExpr& e, const VarBindings& b);
Rational eval_rational(const RatExpr& e, const NamedBindings& b);

bool expr_equal(const RatExpr& a, const RatExpr& b);

RatExpr substitute(const RatExpr& e, SymbolId var, const RatExpr& replacement);
RatExpr substitute(const RatExpr& e, const std::string& var, const RatExpr& replacement);
/// Simultaneous substitution.
RatExpr substitute(const RatExpr& e, const std::map<SymbolId, RatExpr>& repl);

/// Coefficients c_0..c_max_deg of e as a polynomial in var. Throws AlgebraError
/// if the canonical denominator involves var or the degree exceeds max_deg.
std::vector<RatExpr> poly_coeffs_in(const RatExpr& e, SymbolId var, unsigned max_deg);
std::vector<RatExpr> poly_coeffs_in(const RatExpr& e, const std::string& var, unsigned max_deg);

struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

/// Parses the expression grammar. Identifiers found in `defs` expand to the
/// stored expression instead of becoming symbols.
RatExpr parse_expr(const std::string& text, const std::map<std::string, RatExpr>* defs = nullptr);

}  // namespace pql::cas
