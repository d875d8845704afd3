#pragma once

#include <stdexcept>
#include <string>

namespace itcalc {

enum class ErrorKind {
  InvalidInput,
  InvalidPath,
  NonAdmissible,
  AlgebraMismatch,
  NotNakayama,
  ParseError,
  UnknownVertex,
  ZeroComplex,
  TermNotFProjective,
  NotSelfOrthogonal,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based line and column (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column = 0)
      : Error(ErrorKind::ParseError, format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  int line_;
  int column_;
};

}  // namespace itcalc
