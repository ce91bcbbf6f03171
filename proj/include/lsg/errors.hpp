#pragma once

#include <stdexcept>
#include <string>

namespace lsg {

// A documented precondition or size guard of an operation was violated.
// `condition()` names the failed condition so callers can report it.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string condition, const std::string& message)
      : std::invalid_argument(message), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Exponential-cost operations refuse inputs beyond their desk-scale limit.
class GuardError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A construction produced output violating its own postcondition. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const char* condition, const std::string& message) {
  if (!ok) throw PreconditionError(condition, message);
}

inline void guard(bool ok, const char* condition, const std::string& message) {
  if (!ok) throw GuardError(condition, message);
}

}  // namespace lsg
