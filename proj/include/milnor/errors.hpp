#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

/// Input lies outside the mathematical domain of an operation
/// (singular matrix, root off the unit circle, excluded xi, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A documented precondition does not hold; the message names the
/// operation the caller should use instead when there is one.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-check between two independent computations failed.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace milnor
