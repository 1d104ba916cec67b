#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the structures this tool can handle (exit code 2 in the CLI).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A bounded linear-algebra solve would exceed the configured entry cap.
class DimensionCapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace lnd
