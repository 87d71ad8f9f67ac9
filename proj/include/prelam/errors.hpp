#pragma once

#include <stdexcept>
#include <string>

namespace prelam {

enum class ErrorKind {
  Parse,
  EndpointCollision,
  InvalidLamination,
  PreconditionViolated,
  EmptyInterval,
  NotShellStar,
  NotOnShell,
  NotMonotone,
  StructuralError,
  UnknownPoint,
  SizeExceeded,
  BadBounds,
  OutOfRange,
  DomainError,
  NotAGap,
  NotApplicable,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::EndpointCollision: return "EndpointCollision";
    case ErrorKind::InvalidLamination: return "InvalidLamination";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::NotShellStar: return "NotShellStar";
    case ErrorKind::NotOnShell: return "NotOnShell";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::StructuralError: return "StructuralError";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::BadBounds: return "BadBounds";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotAGap: return "NotAGap";
    case ErrorKind::NotApplicable: return "NotApplicable";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace prelam
