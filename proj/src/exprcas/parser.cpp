#include <cctype>

#include "pql/cas/expr.hpp"

namespace pql::cas {
namespace {

constexpr long kMaxExponent = 255;

class Parser {
 public:
  Parser(const std::string& s, const std::map<std::string, RatExpr>* defs) : s_(s), defs_(defs) {}

  RatExpr run() {
    RatExpr e = expr();
    skip();
    if (pos_ < s_.size()) unexpected();
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void unexpected() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (!std::isprint(c) || (std::string("+-*/^()_").find(char(c)) == std::string::npos && !std::isalnum(c)))
      throw ParseError(std::string("unknown character '") + char(c) + "'", pos_);
    throw ParseError(std::string("unexpected '") + char(c) + "'", pos_);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  RatExpr expr() {
    std::vector<RatExpr> terms{term()};
    while (true) {
      if (peek('+')) {
        ++pos_;
        terms.push_back(term());
      } else if (peek('-')) {
        ++pos_;
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms[0] : RatExpr::sum(std::move(terms));
  }

  RatExpr term() {
    RatExpr acc = unary();
    std::vector<RatExpr> factors{acc};
    while (true) {
      if (peek('*')) {
        ++pos_;
        factors.push_back(unary());
      } else if (peek('/')) {
        ++pos_;
        RatExpr num = factors.size() == 1 ? factors[0] : RatExpr::product(std::move(factors));
        factors = {RatExpr::quotient(num, unary())};
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors[0] : RatExpr::product(std::move(factors));
  }

  RatExpr unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return factor();
  }

  RatExpr factor() {
    RatExpr b = base();
    if (!peek('^')) return b;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t at = pos_;
    std::string d = digits();
    if (d.empty()) unexpected();
    if (d.size() > 6 || std::stol(d) > kMaxExponent)
      throw ParseError("exponent overflow (|k| <= " + std::to_string(kMaxExponent) + ")", at);
    long k = std::stol(d);
    return RatExpr::power(b, neg ? -k : k);
  }

  RatExpr base() {
    skip();
    if (pos_ >= s_.size()) unexpected();
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatExpr e = expr();
      if (!peek(')')) {
        if (pos_ >= s_.size()) throw ParseError("expected ')' but reached end of input", pos_);
        unexpected();
      }
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      // A rational literal only when '/' is immediately followed by digits.
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t at = pos_;
        std::string den = digits();
        if (mpz_class(den) == 0) throw ParseError("zero denominator in rational literal", at);
        return RatExpr(parse_rational(num + "/" + den));
      }
      return RatExpr(Rational(mpz_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (defs_) {
        if (auto it = defs_->find(name); it != defs_->end()) return it->second;
      }
      return RatExpr::var(name);
    }
    unexpected();
  }

  const std::string& s_;
  const std::map<std::string, RatExpr>* defs_;
  std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_expr(const std::string& text, const std::map<std::string, RatExpr>* defs) {
  return Parser(text, defs).run();
}

}  // namespace pql::cas
