#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pomat {

enum class Errc {
  CycleDetected,
  UnknownElement,
  GroundSetTooLarge,
  DomainMismatch,
  NegativeWeight,
  NotAnUpSet,
  NotHereditary,
  EmptySetRejected,
  NotAViolation,
  WeightNotOrderPreserving,
  WeightNotOrderReversing,
  NotAnAntichain,
  EmptyFacet,
  NotAFace,
  DimensionTooSmall,
  DimensionMismatch,
  DisjointCycles,
  Degenerate,
  BadH,
  BadRational,
  BadDocument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::NotAnUpSet: return "NotAnUpSet";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::EmptySetRejected: return "EmptySetRejected";
    case Errc::NotAViolation: return "NotAViolation";
    case Errc::WeightNotOrderPreserving: return "WeightNotOrderPreserving";
    case Errc::WeightNotOrderReversing: return "WeightNotOrderReversing";
    case Errc::NotAnAntichain: return "NotAnAntichain";
    case Errc::EmptyFacet: return "EmptyFacet";
    case Errc::NotAFace: return "NotAFace";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DisjointCycles: return "DisjointCycles";
    case Errc::Degenerate: return "Degenerate";
    case Errc::BadH: return "BadH";
    case Errc::BadRational: return "BadRational";
    case Errc::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pomat
