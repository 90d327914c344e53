#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sncover {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed inputs: bad element ids, bad set handles, inconsistent shapes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Instance cannot be covered (some element lies in no set).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The instance (or a residual of it) has no tau-SNC element.
class NotSncError : public Error {
 public:
  NotSncError(const std::string& msg, std::vector<int> witness_elements)
      : Error(msg), witness(std::move(witness_elements)) {}

  /// A residual element set in which no element passed the membership test.
  std::vector<int> witness;
};

/// A configured resource limit was exceeded (frequency cap, node budget, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-supplied parameters (epsilon out of range, tau < 1, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or suite file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Instance generator could not satisfy its constraints within its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Violated internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sncover
