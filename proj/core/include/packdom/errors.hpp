#pragma once

#include <stdexcept>
#include <string>

namespace packdom {

// Bad arguments or a violated precondition (not a tree, vertex out of range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. Line numbers are 1-based; 0 means "whole input".
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exact solve ran out of time inside an operation that cannot return a
// partial answer.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked postcondition failed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace packdom
