#pragma once

#include <stdexcept>
#include <string>

namespace circarc {

// A claimed invariant of the algorithm failed; carries the violating witness.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An input did not satisfy a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace circarc
