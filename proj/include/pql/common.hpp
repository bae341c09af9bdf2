#pragma once

#include <stdexcept>
#include <string>

namespace pql {

/// Caller violated an operation's documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two results that must never co-occur did.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical procedure could not reach a decision.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pql
