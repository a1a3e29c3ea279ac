#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicm {

enum class ErrorKind {
  InvalidArgument,
  RingMismatch,
  ZeroPolynomial,
  NotBihomogeneous,
  UnitIdeal,
  ZeroModule,
  NoRegularForm,
  UndecidableByRules,
  NotMonomial,
  UnsupportedIdealClass,
  CertificateVerificationFailed,
  Parse,
  Semantic,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C layer and the
// CLI can map it onto a status / exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse and semantic errors in problem text, positioned 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, int line, int column)
      : Error(kind, format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace bicm
