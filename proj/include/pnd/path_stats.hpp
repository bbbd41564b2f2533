#pragma once

// Summaries of a decomposition: how many joint-network shortest paths each
// lattice element dominates, overall and per path length, plus per-pair
// "mode networks".

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pnd/decomposition.hpp"

namespace pnd {

/// Counts and fractions per lattice element over pairs reachable in the joint network.
struct ModeProportions {
  std::vector<std::string> labels;
  std::vector<std::size_t> counts;
  std::vector<double> fractions;
  std::size_t reachable_pairs = 0;

  /// Two-layer lookup; requires a 4-element (N = 2) decomposition.
  double fraction(Character c) const;
};

struct LengthRow {
  std::uint32_t length = 0;
  std::vector<std::size_t> counts;
  std::vector<double> fractions;
  std::size_t total = 0;
};

struct LengthProfile {
  std::vector<std::string> labels;
  std::vector<LengthRow> rows;  // ascending length
};

/// One pair measure per lattice element; a pair contributes its dominant atom
/// to the matrix of its dominant element only.
struct ModeNetworks {
  std::vector<std::string> labels;
  std::vector<PairMeasure> networks;
};

/// Short names for the two-layer lattice (R, U1, U2, S), element labels otherwise.
std::vector<std::string> element_names(const AntichainLattice& lattice);

/// Throws Error(NoReachablePairs).
ModeProportions mode_proportions(const PNDResult& result);

/// Rows keyed by joint shortest-path length. Throws Error(NoReachablePairs).
LengthProfile proportions_by_length(const PNDResult& result);

ModeNetworks edgewise_networks(const PNDResult& result);

}  // namespace pnd
