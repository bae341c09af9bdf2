#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pql/cas/symbol.hpp"

namespace pql::cas {

/// Dense exponent vector over the global symbol table.
struct Monomial {
  std::array<std::uint8_t, kMaxSymbols> exp{};
  std::uint32_t degree = 0;

  static Monomial var(SymbolId id, unsigned power = 1);

  bool is_one() const { return degree == 0; }
  unsigned operator[](SymbolId id) const { return exp[id]; }

  Monomial operator*(const Monomial& o) const;
  /// Quotient if `o` divides this monomial.
  std::optional<Monomial> divide(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

/// Graded lexicographic order: higher total degree first, ties broken by the
/// exponent of the lowest-numbered symbol.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

using VarBindings = std::map<SymbolId, Rational>;

/// Sparse multivariate polynomial with rational coefficients. Terms are kept in
/// strictly decreasing grlex order with no zero coefficients, so structural
/// equality is polynomial equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  explicit Poly(Rational c);
  static Poly var(SymbolId id);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of the constant term (zero for the zero polynomial).
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;

  /// Exact multivariate division; nullopt if `divisor` does not divide this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  unsigned degree_in(SymbolId v) const;
  bool contains(SymbolId v) const { return degree_in(v) > 0; }
  /// Coefficient polynomial of v^k (v eliminated).
  Poly coefficient_of(SymbolId v, unsigned k) const;

  /// Evaluates with every occurring symbol bound. Throws EvalError on a free symbol.
  Rational eval(const VarBindings& b) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Rational function num/den. `normalized()` cancels exact divisibility between
/// numerator and denominator and makes the denominator's leading coefficient 1;
/// no polynomial GCD is computed, so equal functions may differ in
/// representation. Compare with `equals`.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT implicit
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc pow(long e) const;

  bool equals(const RatFunc& o) const;
  Rational eval(const VarBindings& b) const;
  std::string str() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace pql::cas
