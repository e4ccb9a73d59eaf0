#pragma once

#include <stdexcept>
#include <string>

namespace toric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside a family's domain (gcd, label < 2, Bezout, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// An operation needed a complete (finite) structure and did not get one.
class IncompleteError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
