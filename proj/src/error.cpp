#include "pnd/error.hpp"

namespace pnd {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NodeCountMismatch: return "NodeCountMismatch";
    case Errc::TooFewNodes: return "TooFewNodes";
    case Errc::NoReachablePairs: return "NoReachablePairs";
    case Errc::UnsupportedLayerCount: return "UnsupportedLayerCount";
    case Errc::InvalidLengths: return "InvalidLengths";
    case Errc::AllZeroAtoms: return "AllZeroAtoms";
    case Errc::InvalidDensity: return "InvalidDensity";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyPopulation: return "EmptyPopulation";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownLayer: return "UnknownLayer";
    case Errc::OverlappingGroups: return "OverlappingGroups";
    case Errc::AlignmentError: return "AlignmentError";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pnd
