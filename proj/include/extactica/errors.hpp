#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extactica {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable tag used in structured CLI errors.
  virtual const char* kind() const noexcept { return "error"; }
};

/// Operands live over different variable lists, or a variable is unknown.
class VariableError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "variable"; }
};

/// Division by zero or a non-exact polynomial division.
class DivisionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "division"; }
};

/// A precondition on degrees, sizes or shapes does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Text or JSON input rejected; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        message_(message),
        line_(line),
        column_(column) {}

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace extactica
