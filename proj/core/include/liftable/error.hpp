#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liftable {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (wrong degree, non-unit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the materialization guards (degree, element or coset caps).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace liftable
