#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

enum class ErrorKind {
  InvalidInput,
  SyntaxError,
  Inhomogeneous,
  UnknownVariable,
  FlavorMismatch,
  NotQuadratic,
  NotAComplex,
  NonCommutativeInput,
  PreconditionFailed,
  NotAnEnvelopingSeries,
  TruncationExceeded,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying a kind; callers
/// (the CLI in particular) dispatch on kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based source position (0 when unknown).
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, const std::string& what, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace gradalg
