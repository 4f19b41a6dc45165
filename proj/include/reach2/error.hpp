#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reach2 {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input. `line` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An invalid query argument (out of range id, forbidden vertex, ...).
class QueryError : public Error {
 public:
  using Error::Error;
};

// An internal algebraic or structural invariant failed. Always a bug or an
// invalid closure handed to an operation that trusts its input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace reach2
