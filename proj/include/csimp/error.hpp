#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csimp {

enum class Errc {
  NonMonotone,
  OutOfRange,
  DomainMismatch,
  IndexOutOfRange,
  LevelOutOfRange,
  LevelTooLarge,
  NotCoskeletal,
  NotInterpolative,
  NotAnIdeal,
  MissingIdentityIdeal,
  ShapeMismatch,
  InvalidInput,
  NotCommutative,
  UnknownVerb,
  MissingOption,
  BadLevel,
  IoError,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::LevelTooLarge: return "LevelTooLarge";
    case Errc::NotCoskeletal: return "NotCoskeletal";
    case Errc::NotInterpolative: return "NotInterpolative";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::MissingIdentityIdeal: return "MissingIdentityIdeal";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotCommutative: return "NotCommutative";
    case Errc::UnknownVerb: return "UnknownVerb";
    case Errc::MissingOption: return "MissingOption";
    case Errc::BadLevel: return "BadLevel";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace csimp
