#pragma once

#include <stdexcept>
#include <string>

namespace monomap {

// Precondition violations and malformed arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or enumeration was asked to exceed its configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A plan that cannot have come from a valid run on a reduction instance.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input that failed to parse. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedHeader,
    kNonInteger,
    kVariableOutOfRange,
    kClauseArity,
    kClauseCountMismatch,
    kSchema,
  };

  ParseError(Kind kind, int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

}  // namespace monomap
