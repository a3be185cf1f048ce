#include "gqw/error.hpp"

namespace gqw {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::Precondition:
      return "precondition";
    case ErrorKind::Violation:
      return "violation";
    case ErrorKind::CapExceeded:
      return "cap-exceeded";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::Precondition:
      return 3;
    case ErrorKind::Violation:
      return 4;
    case ErrorKind::CapExceeded:
      return 5;
  }
  return 1;
}

namespace {
std::string located(const std::string& what, std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}
}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(ErrorKind::Parse, located(what, line, column)), line_(line), column_(column) {}

}  // namespace gqw
