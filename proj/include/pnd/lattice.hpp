#pragma once

// Antichain (redundancy) lattice over the non-empty subsets of N layers.
//
// A layer subset is a bitmask (bit k = layer k, zero-based). An antichain is a
// family of subsets none of which contains another. The order is
//   alpha <= beta  iff  for every b in beta there is a in alpha with a ⊆ b,
// which puts {{1},{2},...,{N}} at the bottom and {{1,...,N}} at the top.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pnd {

using LayerMask = std::uint32_t;

/// Subsets stored in canonical order (by size, then by their sorted layer lists).
using Antichain = std::vector<LayerMask>;

inline constexpr std::size_t kMaxLayers = 4;

class AntichainLattice {
 public:
  /// Throws Error(UnsupportedLayerCount) unless 2 <= n_layers <= max_layers.
  explicit AntichainLattice(std::size_t n_layers, std::size_t max_layers = kMaxLayers);

  std::size_t n_layers() const noexcept { return n_layers_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Elements are indexed in a linear extension of the order: every element
  /// appears after all elements below it; ties are broken lexicographically.
  const Antichain& element(std::size_t k) const noexcept { return elements_[k]; }
  const std::vector<Antichain>& elements() const noexcept { return elements_; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  bool precedes_or_equal(std::size_t a, std::size_t b) const noexcept { return leq_[a * size() + b] != 0; }
  bool strictly_precedes(std::size_t a, std::size_t b) const noexcept { return a != b && precedes_or_equal(a, b); }

  const std::vector<std::size_t>& lower_covers(std::size_t k) const noexcept { return lower_covers_[k]; }
  const std::vector<std::size_t>& strictly_below(std::size_t k) const noexcept { return below_[k]; }
  std::size_t meet(std::size_t a, std::size_t b) const noexcept { return meet_[a * size() + b]; }

  /// Index of an antichain given in any subset order; size() if absent.
  std::size_t find(Antichain a) const;

  /// Union of every layer mask that appears in some element.
  std::vector<LayerMask> used_masks() const;

  /// "{1}{2}", "{1,2}", ... with one-based layer numbers.
  std::string label(std::size_t k) const;

 private:
  std::size_t n_layers_;
  std::vector<Antichain> elements_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::size_t> meet_;
};

AntichainLattice build_lattice(std::size_t n_layers);

/// Order relation evaluated directly from its definition.
bool antichain_leq(const Antichain& alpha, const Antichain& beta);

/// Minimal elements of alpha ∪ beta, canonically sorted.
Antichain minimal_elements(const Antichain& family);

/// Canonical ordering of subsets used for all antichains.
bool subset_less(LayerMask a, LayerMask b);

}  // namespace pnd
