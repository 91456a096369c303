#pragma once

#include <stdexcept>
#include <string>

namespace pbci {

// Base for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad tables, bad text, bad names.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A caller-supplied object does not satisfy an operation's precondition
// (e.g. a subset that is not a filter, a partition that is not a congruence).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Configured size or family cap exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Indicates a bug, never bad input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pbci
