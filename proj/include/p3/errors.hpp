#pragma once

#include <stdexcept>
#include <string>

namespace p3 {

// Caller passed something outside an operation's declared input space.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a structural precondition
// (disconnected graph, not 2-connected, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive search was asked to run beyond its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A degree sequence that has no factorization into basic sequences.
class MalformedSequence : public InputError {
 public:
  using InputError::InputError;
};

// The given vertex order does not have consecutive closed neighborhoods, or
// no such order exists.
class NotUnitInterval : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Raised when an internal case analysis finds zero or several applicable
// cases. Indicates a hole in the closed-form case list, not a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace p3
