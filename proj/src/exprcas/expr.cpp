#include "pql/cas/expr.hpp"

#include <sstream>
#include <unordered_map>

namespace pql::cas {

using detail::Kind;
using detail::Node;
using NodePtr = std::shared_ptr<const Node>;

namespace {

NodePtr make(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

NodePtr const_node(Rational c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  c.canonicalize();
  n->value = std::move(c);
  return n;
}

RatFunc compute_canon(const Node& n);

const RatFunc& canon_of(const Node& n) {
  std::call_once(n.canon_once, [&n] { n.canon = compute_canon(n); });
  return *n.canon;
}

RatFunc compute_canon(const Node& n) {
  switch (n.kind) {
    case Kind::Const:
      return RatFunc(Poly(n.value));
    case Kind::Var:
      return RatFunc(Poly::var(n.sym));
    case Kind::Sum: {
      RatFunc acc;
      for (const auto& k : n.kids) acc = acc + canon_of(*k);
      return acc;
    }
    case Kind::Product: {
      RatFunc acc(Poly(Rational(1)));
      for (const auto& k : n.kids) {
        acc = acc * canon_of(*k);
        if (acc.is_zero()) break;
      }
      return acc;
    }
    case Kind::Pow:
      return canon_of(*n.kids[0]).pow(n.exponent);
    case Kind::Quotient:
      return canon_of(*n.kids[0]) / canon_of(*n.kids[1]);
  }
  throw AlgebraError("corrupt expression node");
}

// Print contexts: 0 = sum operand / top level, 1 = product operand,
// 2 = quotient denominator or power base.
void print(const Node& n, int ctx, std::ostream& os);

bool negative_const(const Node& n) { return n.kind == Kind::Const && n.value < 0; }

void print_const(const Rational& v, int ctx, std::ostream& os) {
  bool plain = v.get_den() == 1 && (v >= 0 || ctx == 0);
  if (plain)
    os << v.get_str();
  else
    os << "(" << v.get_str() << ")";
}

// Product body, with the sign of a leading negative constant optionally dropped.
void print_product(const Node& n, bool drop_sign, std::ostream& os) {
  bool first = true;
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    const Node& k = *n.kids[i];
    if (i == 0 && drop_sign && negative_const(k)) {
      Rational a = -k.value;
      if (a == 1 && n.kids.size() > 1) continue;
      if (!first) os << "*";
      print_const(a, 1, os);
      first = false;
      continue;
    }
    if (!first) os << "*";
    if (k.kind == Kind::Quotient)
      os << "(", print(k, 0, os), os << ")";
    else
      print(k, 1, os);
    first = false;
  }
  if (first) os << "1";
}

void print(const Node& n, int ctx, std::ostream& os) {
  switch (n.kind) {
    case Kind::Const:
      print_const(n.value, ctx, os);
      return;
    case Kind::Var:
      os << symbol_name(n.sym);
      return;
    case Kind::Sum: {
      if (n.kids.empty()) {
        os << "0";
        return;
      }
      if (ctx > 0) os << "(";
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        const Node& k = *n.kids[i];
        bool neg = negative_const(k) ||
                   (k.kind == Kind::Product && !k.kids.empty() && negative_const(*k.kids[0]));
        if (i == 0) {
          if (neg) os << "-";
        } else {
          os << (neg ? " - " : " + ");
        }
        if (!neg)
          print(k, 0, os);
        else if (k.kind == Kind::Const)
          print_const(-k.value, 1, os);
        else
          print_product(k, true, os);
      }
      if (ctx > 0) os << ")";
      return;
    }
    case Kind::Product:
      if (ctx > 1 || n.kids.size() == 1) {
        os << "(";
        print_product(n, false, os);
        os << ")";
      } else {
        print_product(n, false, os);
      }
      return;
    case Kind::Pow:
      if (ctx > 1) os << "(";
      print(*n.kids[0], 2, os);
      os << "^" << n.exponent;
      if (ctx > 1) os << ")";
      return;
    case Kind::Quotient: {
      bool paren = ctx > 1;
      if (paren) os << "(";
      const Node& num = *n.kids[0];
      if (num.kind == Kind::Quotient || num.kind == Kind::Product)
        os << "(", print(num, 0, os), os << ")";
      else
        print(num, 1, os);
      os << "/";
      print(*n.kids[1], 2, os);
      if (paren) os << ")";
      return;
    }
  }
}

std::string clip(std::string s) {
  constexpr std::size_t kMax = 240;
  if (s.size() > kMax) s = s.substr(0, kMax) + "...";
  return s;
}

RatExpr poly_to_expr(const Poly& p) {
  std::vector<RatExpr> terms;
  for (const auto& t : p.terms()) {
    std::vector<RatExpr> f;
    if (t.coeff != 1 || t.mono.is_one()) f.emplace_back(t.coeff);
    for (SymbolId i = 0; i < kMaxSymbols; ++i) {
      unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      f.push_back(e == 1 ? RatExpr::var(i) : RatExpr::power(RatExpr::var(i), e));
    }
    terms.push_back(f.size() == 1 ? f[0] : RatExpr::product(std::move(f)));
  }
  if (terms.empty()) return RatExpr(0L);
  if (terms.size() == 1) return terms[0];
  return RatExpr::sum(std::move(terms));
}

}  // namespace

RatExpr::RatExpr() : node_(const_node(Rational(0))) {}
RatExpr::RatExpr(Rational c) : node_(const_node(std::move(c))) {}
RatExpr::RatExpr(long c) : node_(const_node(Rational(c))) {}

RatExpr RatExpr::var(const std::string& name) { return var(intern(name)); }

RatExpr RatExpr::var(SymbolId id) {
  auto n = make(Kind::Var);
  std::const_pointer_cast<Node>(n)->sym = id;
  return RatExpr(n);
}

RatExpr RatExpr::sum(std::vector<RatExpr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  for (auto& t : terms) n->kids.push_back(std::move(t.node_));
  return RatExpr(NodePtr(n));
}

RatExpr RatExpr::product(std::vector<RatExpr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  for (auto& t : factors) n->kids.push_back(std::move(t.node_));
  return RatExpr(NodePtr(n));
}

RatExpr RatExpr::quotient(RatExpr num, RatExpr den) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quotient;
  n->kids = {std::move(num.node_), std::move(den.node_)};
  return RatExpr(NodePtr(n));
}

RatExpr RatExpr::power(RatExpr base, long e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = e;
  n->kids = {std::move(base.node_)};
  return RatExpr(NodePtr(n));
}

RatExpr RatExpr::from_ratfunc(const RatFunc& f) {
  RatExpr num = poly_to_expr(f.num());
  RatExpr out = f.den().is_constant() && f.den().constant_term() == 1
                    ? num
                    : quotient(num, poly_to_expr(f.den()));
  std::call_once(out.node_->canon_once, [&] { out.node_->canon = f; });
  return out;
}

const RatFunc& RatExpr::canon() const { return canon_of(*node_); }

std::optional<Rational> RatExpr::as_constant() const {
  const RatFunc& f = canon();
  if (f.num().is_constant() && f.den().is_constant()) return f.num().constant_term();
  return std::nullopt;
}

std::string RatExpr::str() const {
  std::ostringstream os;
  print(*node_, 0, os);
  return os.str();
}

Rational eval_rational(const RatExpr& e, const VarBindings& b) {
  std::unordered_map<const Node*, Rational> memo;
  auto rec = [&](auto& self, const Node& n) -> Rational {
    if (auto it = memo.find(&n); it != memo.end()) return it->second;
    Rational v;
    switch (n.kind) {
      case Kind::Const:
        v = n.value;
        break;
      case Kind::Var: {
        auto it = b.find(n.sym);
        if (it == b.end()) throw EvalError("unbound variable '" + symbol_name(n.sym) + "'");
        v = it->second;
        break;
      }
      case Kind::Sum:
        v = 0;
        for (const auto& k : n.kids) v += self(self, *k);
        break;
      case Kind::Product:
        v = 1;
        for (const auto& k : n.kids) v *= self(self, *k);
        break;
      case Kind::Pow: {
        Rational base = self(self, *n.kids[0]);
        long e = n.exponent;
        if (e < 0) {
          if (base == 0) {
            std::ostringstream os;
            print(n, 0, os);
            throw EvalError("division by zero in " + clip(os.str()));
          }
          base = Rational(1) / base;
          e = -e;
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
        v = Rational(num, den);
        v.canonicalize();
        break;
      }
      case Kind::Quotient: {
        Rational den = self(self, *n.kids[1]);
        if (den == 0) {
          std::ostringstream os;
          print(*n.kids[1], 0, os);
          throw EvalError("division by zero: denominator " + clip(os.str()) + " vanishes");
        }
        v = self(self, *n.kids[0]) / den;
        break;
      }
    }
    memo.emplace(&n, v);
    return v;
  };
  return rec(rec, *e.node());
}

Rational eval_rational(const RatExpr& e, const NamedBindings& b) {
  VarBindings ids;
  for (const auto& [name, v] : b) ids.emplace(intern(name), v);
  return eval_rational(e, ids);
}

bool expr_equal(const RatExpr& a, const RatExpr& b) { return a.canon().equals(b.canon()); }

RatExpr substitute(const RatExpr& e, const std::map<SymbolId, RatExpr>& repl) {
  std::unordered_map<const Node*, NodePtr> memo;
  auto rec = [&](auto& self, const NodePtr& n) -> NodePtr {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    NodePtr out = n;
    if (n->kind == Kind::Var) {
      if (auto it = repl.find(n->sym); it != repl.end()) out = it->second.ptr();
    } else if (!n->kids.empty()) {
      std::vector<NodePtr> kids;
      bool changed = false;
      for (const auto& k : n->kids) {
        kids.push_back(self(self, k));
        changed |= kids.back() != k;
      }
      if (changed) {
        auto m = std::make_shared<Node>();
        m->kind = n->kind;
        m->exponent = n->exponent;
        m->kids = std::move(kids);
        out = m;
      }
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return RatExpr(rec(rec, e.ptr()));
}

RatExpr substitute(const RatExpr& e, SymbolId var, const RatExpr& replacement) {
  return substitute(e, std::map<SymbolId, RatExpr>{{var, replacement}});
}

RatExpr substitute(const RatExpr& e, const std::string& var, const RatExpr& replacement) {
  return substitute(e, intern(var), replacement);
}

std::vector<RatExpr> poly_coeffs_in(const RatExpr& e, SymbolId var, unsigned max_deg) {
  const RatFunc& f = e.canon();
  if (f.den().contains(var))
    throw AlgebraError("not polynomial in " + symbol_name(var) + ": denominator " + clip(f.den().str()));
  unsigned deg = f.num().degree_in(var);
  if (deg > max_deg)
    throw AlgebraError("degree " + std::to_string(deg) + " in " + symbol_name(var) + " exceeds " +
                       std::to_string(max_deg));
  std::vector<RatExpr> out;
  for (unsigned i = 0; i <= max_deg; ++i)
    out.push_back(RatExpr::from_ratfunc(RatFunc(f.num().coefficient_of(var, i), f.den())));
  return out;
}

std::vector<RatExpr> poly_coeffs_in(const RatExpr& e, const std::string& var, unsigned max_deg) {
  return poly_coeffs_in(e, intern(var), max_deg);
}

}  // namespace pql::cas
