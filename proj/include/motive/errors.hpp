#pragma once

#include <stdexcept>
#include <string>

namespace motive {

// Base class for computation failures: resource caps, overflow, violated
// preconditions, failed internal consistency checks. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Input data violates an operation's precondition: a non-pure sum where
// purity is required, a fiber without Poincare duality, an invalid
// configuration, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal self-check failed; never expected to fire.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed user-facing syntax (Cartan type strings, subset lists). Rejected
// before any computation starts; the CLI maps these to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace motive
