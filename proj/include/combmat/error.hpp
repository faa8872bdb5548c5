#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace combmat {

// Base of every error the engine raises. Nothing in the library aborts or
// approximates: an operation that cannot produce an exact result throws one of
// these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Rectangular input where a square one is needed, or mismatched operand shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// 1-based index outside the matrix.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Precondition on the value of an input (not its shape) failed, e.g. a
// non-triangular matrix passed to a triangular check.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 0 when the error is not attributable to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace combmat
