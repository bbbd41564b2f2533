#pragma once

// Partial network decomposition of global efficiency.
//
// For a node pair, the redundancy of a lattice element alpha is the smallest
// pair efficiency over the unions named by alpha. Atoms are its Möbius
// inversion over the antichain lattice; they are non-negative and sum to the
// pair's efficiency in the joint network.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnd/graph.hpp"
#include "pnd/lattice.hpp"
#include "pnd/multiplex.hpp"

namespace pnd {

/// Atoms whose magnitude is below this are floating-point residue of the
/// inversion and are stored as exactly 0. Valid while path lengths stay
/// far below 1e6 (smallest genuine atom is of order 1/l^2).
inline constexpr double kAtomZeroTolerance = 1e-13;

using Profile = std::vector<double>;     // f_cap per lattice element
using AtomVector = std::vector<double>;  // f_partial per lattice element

Profile redundancy_profile(const Multiplex& m, NodeId i, NodeId j, const AntichainLattice& lattice);

/// Redundancy profile from per-subset pair efficiencies (`efficiency[mask]`).
Profile redundancy_profile(std::span<const double> efficiency_by_mask, const AntichainLattice& lattice);

/// F_partial(alpha) = F_cap(alpha) - sum of F_partial(beta) over beta strictly below alpha,
/// accumulated bottom-up in the lattice's linear extension.
AtomVector moebius_atoms(std::span<const double> profile, const AntichainLattice& lattice);

/// F_partial(alpha) = F_cap(alpha) - max over lower covers beta of F_cap(beta);
/// the bottom element keeps F_cap.
AtomVector atoms_closed_form(std::span<const double> profile, const AntichainLattice& lattice);

struct TwoLayerAtoms {
  double redundancy = 0.0;
  double unique1 = 0.0;
  double unique2 = 0.0;
  double synergy = 0.0;

  friend bool operator==(const TwoLayerAtoms&, const TwoLayerAtoms&) = default;
};

/// Hop counts in layer 1, layer 2 and their union (kUnreachable allowed).
/// Throws Error(InvalidLengths) if the union is longer than either layer.
TwoLayerAtoms decompose_pair_two_layer(std::uint32_t l1, std::uint32_t l2, std::uint32_t joint);

enum class Character { Redundant, Unique1, Unique2, Synergistic, Disconnected };

std::string_view character_name(Character c) noexcept;

Character classify_pair(std::uint32_t l1, std::uint32_t l2, std::uint32_t joint);

struct Dominance {
  std::size_t element = 0;
  bool ambiguous = false;  // several maximal positive atoms (possible only for N > 2)
};

/// Highest lattice element with a positive atom. Throws Error(AllZeroAtoms).
Dominance dominant_character_general(std::span<const double> atoms, const AntichainLattice& lattice);

/// Two-layer character of a lattice element of the N = 2 lattice.
Character two_layer_character(const AntichainLattice& lattice, std::size_t element);

inline constexpr std::int32_t kNoCharacter = -1;

struct PNDResult {
  std::shared_ptr<const AntichainLattice> lattice;
  std::size_t node_count = 0;
  /// pair_count(node_count) x lattice->size(), row per pair in pair_index order.
  std::vector<double> pair_atoms;
  /// Mean of pair_atoms over all unordered distinct pairs.
  std::vector<double> mean_atoms;
  /// Dominant lattice element per pair, kNoCharacter when disconnected in the joint network.
  std::vector<std::int32_t> dominant;
  std::vector<std::uint8_t> ambiguous;
  std::size_t ambiguous_count = 0;
  DistanceMatrix joint_distances;
  double joint_efficiency = 0.0;

  std::span<const double> atoms(std::size_t pair) const {
    return {pair_atoms.data() + pair * lattice->size(), lattice->size()};
  }
  std::span<const double> atoms(NodeId i, NodeId j) const {
    return atoms(pair_index(node_count, std::min(i, j), std::max(i, j)));
  }
};

/// Decomposes every unordered distinct pair of the multiplex.
PNDResult decompose_network(const Multiplex& m);

}  // namespace pnd
