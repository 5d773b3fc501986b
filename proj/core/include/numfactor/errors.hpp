#pragma once

#include <stdexcept>
#include <string>

namespace numfactor {

/// Discriminates the failure modes of the library. Every numfactor::Error
/// carries one of these so callers can branch without parsing messages.
enum class Errc {
  EmptyGenerators,
  InvalidGenerator,
  GeneratorTooLarge,
  GcdNotOne,
  NotAnElement,
  NotAFactorization,
  DimensionMismatch,
  BadAtomIndex,
  RangeTooSmall,
  WindowTooShort,
  Overflow,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::GeneratorTooLarge: return "GeneratorTooLarge";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotAnElement: return "NotAnElement";
    case Errc::NotAFactorization: return "NotAFactorization";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadAtomIndex: return "BadAtomIndex";
    case Errc::RangeTooSmall: return "RangeTooSmall";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace numfactor
