#include "gradalg/error.hpp"

namespace gradalg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NonCommutativeInput: return "NonCommutativeInput";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAnEnvelopingSeries: return "NotAnEnvelopingSeries";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string with_position(const std::string& what, int line, int column) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) +
         ": " + what;
}

}  // namespace

SyntaxError::SyntaxError(ErrorKind kind, const std::string& what, int line,
                         int column)
    : Error(kind, with_position(what, line, column)),
      line_(line),
      column_(column) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gradalg
