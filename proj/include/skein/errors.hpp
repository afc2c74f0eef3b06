#ifndef SKEIN_ERRORS_HPP
#define SKEIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skein {

enum class ErrorKind {
  NotDivisible,
  DivisionByZero,
  NegativeExponent,
  ZeroPolynomial,
  NotAdmissible,
  BoundaryMismatch,
  TooLarge,
  NotPlanar,
  ParseError,
  DanglingEdge,
  OddColorOnSingular,
  ReductionStuck,
  InvalidArgument,
  IoError,
  CacheFormatError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::OddColorOnSingular: return "OddColorOnSingular";
    case ErrorKind::ReductionStuck: return "ReductionStuck";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::CacheFormatError: return "CacheFormatError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported as a SkeinError carrying
/// a machine-checkable kind.
class SkeinError : public std::runtime_error {
 public:
  SkeinError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw SkeinError(kind, what);
}

}  // namespace skein

#endif  // SKEIN_ERRORS_HPP
