#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnd {

enum class Errc {
  OutOfRange,
  SelfLoop,
  NodeCountMismatch,
  TooFewNodes,
  NoReachablePairs,
  UnsupportedLayerCount,
  InvalidLengths,
  AllZeroAtoms,
  InvalidDensity,
  InvalidArgument,
  LengthMismatch,
  EmptyPopulation,
  ZeroVariance,
  ParseError,
  UnknownLayer,
  OverlappingGroups,
  AlignmentError,
  TargetTooLarge,
  SizeMismatch,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pnd
