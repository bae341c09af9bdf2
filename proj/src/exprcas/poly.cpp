#include "pql/cas/poly.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace pql::cas {
namespace {

Rational pow_rational(const Rational& base, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void sort_terms(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return grlex_greater(a.mono, b.mono); });
}

}  // namespace

Monomial Monomial::var(SymbolId id, unsigned power) {
  if (id >= kMaxSymbols) throw AlgebraError("symbol id out of range");
  if (power > 255) throw AlgebraError("exponent overflow: " + std::to_string(power) + " > 255");
  Monomial m;
  m.exp[id] = static_cast<std::uint8_t>(power);
  m.degree = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 255) throw AlgebraError("exponent overflow in product of monomials");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = degree + o.degree;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  if (o.degree > degree) return std::nullopt;
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    if (o.exp[i] > exp[i]) return std::nullopt;
    r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  }
  r.degree = degree - o.degree;
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.exp > b.exp;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::string_view bytes(reinterpret_cast<const char*>(m.exp.data()), m.exp.size());
  return std::hash<std::string_view>{}(bytes);
}

Poly::Poly(Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Poly Poly::var(SymbolId id) { return Poly(std::vector<Term>{{Monomial::var(id), Rational(1)}}); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Poly Poly::operator-() const {
  auto t = terms_;
  for (auto& x : t) x.coeff = -x.coeff;
  return Poly(std::move(t));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono == b->mono) {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    } else if (grlex_greater(a->mono, b->mono)) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, terms_.end());
  out.insert(out.end(), b, o.terms_.end());
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  auto t = terms_;
  for (auto& x : t) x.coeff *= c;
  return Poly(std::move(t));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_constant()) return scaled(o.terms_[0].coeff);
  if (is_constant()) return o.scaled(terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  Rational prod;
  for (const auto& x : terms_) {
    for (const auto& y : o.terms_) {
      prod = x.coeff * y.coeff;
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  sort_terms(out);
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw EvalError("polynomial division by zero");
  if (is_zero()) return Poly();
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.terms_[0].coeff);
  // Cheap necessary conditions: leading and trailing monomials must divide.
  if (!terms_.front().mono.divide(divisor.terms_.front().mono)) return std::nullopt;
  if (!terms_.back().mono.divide(divisor.terms_.back().mono)) return std::nullopt;
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    unsigned dv = 0, nv = 0;
    for (const auto& t : divisor.terms_) dv = std::max<unsigned>(dv, t.mono.exp[v]);
    if (dv == 0) continue;
    for (const auto& t : terms_) nv = std::max<unsigned>(nv, t.mono.exp[v]);
    if (nv < dv) return std::nullopt;
  }

  std::vector<Term> quotient;
  Poly rem = *this;
  const Term& lead = divisor.terms_.front();
  while (!rem.is_zero()) {
    auto m = rem.terms_.front().mono.divide(lead.mono);
    if (!m) return std::nullopt;
    Rational c = rem.terms_.front().coeff / lead.coeff;
    Poly step(std::vector<Term>{{*m, c}});
    rem = rem - step * divisor;
    quotient.push_back({*m, std::move(c)});
  }
  sort_terms(quotient);
  return Poly(std::move(quotient));
}

unsigned Poly::degree_in(SymbolId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[v]);
  return d;
}

Poly Poly::coefficient_of(SymbolId v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[v] != k) continue;
    Term r = t;
    r.mono.exp[v] = 0;
    r.mono.degree -= k;
    out.push_back(std::move(r));
  }
  sort_terms(out);
  return Poly(std::move(out));
}

Rational Poly::eval(const VarBindings& b) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (SymbolId i = 0; i < kMaxSymbols; ++i) {
      if (t.mono.exp[i] == 0) continue;
      auto it = b.find(i);
      if (it == b.end()) throw EvalError("unbound variable '" + symbol_name(i) + "'");
      v *= pow_rational(it->second, t.mono.exp[i]);
    }
    sum += v;
  }
  return sum;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (SymbolId i = 0; i < kMaxSymbols; ++i) {
      unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << symbol_name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace pql::cas
