#include "hindman/error.hpp"

namespace hindman {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::BothFail: return "BothFail";
    case ErrorKind::ClosureFailed: return "ClosureFailed";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NoColor: return "NoColor";
    case ErrorKind::StarFailed: return "StarFailed";
    case ErrorKind::NoTree: return "NoTree";
    case ErrorKind::GuidedFailed: return "GuidedFailed";
    case ErrorKind::DigestMismatch: return "DigestMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool is_surrogate_breakdown(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BothFail:
    case ErrorKind::ClosureFailed:
    case ErrorKind::NoWitness:
    case ErrorKind::NoColor:
    case ErrorKind::StarFailed:
    case ErrorKind::GuidedFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace hindman
