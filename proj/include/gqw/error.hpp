#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqw {

// Error categories. Each one maps to a distinct CLI exit code.
enum class ErrorKind { Parse, Precondition, Violation, CapExceeded };

const char* to_string(ErrorKind kind) noexcept;
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

class ViolationError : public Error {
 public:
  explicit ViolationError(const std::string& what)
      : Error(ErrorKind::Violation, what) {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what)
      : Error(ErrorKind::CapExceeded, what) {}
};

}  // namespace gqw
