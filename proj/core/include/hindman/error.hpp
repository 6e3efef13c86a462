#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hindman {

enum class ErrorKind {
  InvalidArgument,
  UniverseMismatch,
  EmptyFamily,
  BothFail,
  ClosureFailed,
  PreconditionFailed,
  NoWitness,
  NoColor,
  StarFailed,
  NoTree,
  GuidedFailed,
  DigestMismatch,
  TooLarge,
  CapExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for kinds that mean "a finite surrogate broke down" rather than
/// "definitely no".
bool is_surrogate_breakdown(ErrorKind kind) noexcept;

}  // namespace hindman
