#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pql::cas {

/// Exact scalar for all symbolic work. GMP keeps the denominator positive and
/// the fraction reduced after every arithmetic operation.
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unbound variable or a vanishing denominator during exact evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Structural failures of polynomial algebra (coefficient extraction, overflow).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

using SymbolId = std::uint32_t;

/// Upper bound on distinct symbols in one process; monomials are dense arrays.
inline constexpr std::size_t kMaxSymbols = 64;

/// Interns a symbol name. The table is seeded with the parameter names used by
/// the coefficient systems so their relative order (and hence monomial order)
/// never depends on parse order. Thread-safe.
SymbolId intern(std::string_view name);

const std::string& symbol_name(SymbolId id);

/// Number of currently interned symbols.
std::size_t symbol_count();

std::string to_string(const Rational& r);

/// Parses "a" or "a/b" (optionally signed) into a reduced rational.
Rational parse_rational(std::string_view text);

}  // namespace pql::cas
