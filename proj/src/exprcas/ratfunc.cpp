#include "pql/cas/poly.hpp"

namespace pql::cas {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw EvalError("division by zero");
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(Rational(1) / den_.constant_term());
    den_ = Poly(Rational(1));
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Poly(Rational(1));
    return;
  }
  if (!num_.is_constant()) {
    if (auto q = den_.divide_exact(num_)) {
      num_ = Poly(Rational(1));
      den_ = std::move(*q);
    }
  }
  Rational lc = den_.leading().coeff;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (o.den_.size() <= den_.size()) {
    if (auto m = den_.divide_exact(o.den_)) return RatFunc(num_ + o.num_ * *m, den_);
  }
  if (den_.size() <= o.den_.size()) {
    if (auto m = o.den_.divide_exact(den_)) return RatFunc(num_ * *m + o.num_, o.den_);
  }
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!b.is_constant()) {
    if (auto m = c.divide_exact(b)) {
      c = std::move(*m);
      b = Poly(Rational(1));
    }
  }
  if (!d.is_constant()) {
    if (auto m = a.divide_exact(d)) {
      a = std::move(*m);
      d = Poly(Rational(1));
    }
  }
  return RatFunc(a * c, b * d);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw EvalError("division by zero");
  RatFunc inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  Rational lc = inv.den_.leading().coeff;
  inv.num_ = inv.num_.scaled(Rational(1) / lc);
  inv.den_ = inv.den_.scaled(Rational(1) / lc);
  return *this * inv;
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Poly(Rational(1)));
  if (e < 0) return (RatFunc(Poly(Rational(1))) / *this).pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::equals(const RatFunc& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

Rational RatFunc::eval(const VarBindings& b) const {
  Rational dv = den_.eval(b);
  if (dv == 0) throw EvalError("division by zero: denominator " + den_.str() + " vanishes");
  return num_.eval(b) / dv;
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace pql::cas
