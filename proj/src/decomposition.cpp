#include "pnd/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "pnd/error.hpp"
#include "pnd/parallel.hpp"

namespace pnd {

namespace {

double snap(double x) { return std::abs(x) < kAtomZeroTolerance ? 0.0 : x; }

bool is_finite_length(std::uint32_t l) { return l != kUnreachable; }

void check_lengths(std::uint32_t l1, std::uint32_t l2, std::uint32_t joint) {
  if (l1 == 0 || l2 == 0 || joint == 0) {
    throw Error(Errc::InvalidLengths, "path lengths between distinct nodes must be >= 1");
  }
  // kUnreachable is the largest uint32, so it orders like +infinity.
  if (joint > std::min(l1, l2)) {
    throw Error(Errc::InvalidLengths, "joint path longer than a single-layer path");
  }
}

}  // namespace

Profile redundancy_profile(std::span<const double> efficiency_by_mask, const AntichainLattice& lattice) {
  Profile profile(lattice.size());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    double lowest = 1.0;
    for (LayerMask a : lattice.element(k)) lowest = std::min(lowest, efficiency_by_mask[a]);
    profile[k] = lowest;
  }
  return profile;
}

Profile redundancy_profile(const Multiplex& m, NodeId i, NodeId j, const AntichainLattice& lattice) {
  if (i == j || i >= m.node_count() || j >= m.node_count()) {
    throw Error(Errc::InvalidArgument, "redundancy profile needs two distinct nodes of the multiplex");
  }
  if (lattice.n_layers() != m.layer_count()) {
    throw Error(Errc::UnsupportedLayerCount, "lattice built for a different number of layers");
  }
  std::vector<double> eff(std::size_t{1} << m.layer_count(), 0.0);
  for (LayerMask a = 1; a <= m.full_mask(); ++a) eff[a] = hop_efficiency(m.union_distances(a)(i, j));
  return redundancy_profile(eff, lattice);
}

AtomVector moebius_atoms(std::span<const double> profile, const AntichainLattice& lattice) {
  AtomVector atoms(lattice.size(), 0.0);
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    double below = 0.0;
    for (std::size_t b : lattice.strictly_below(k)) below += atoms[b];
    atoms[k] = snap(profile[k] - below);
  }
  return atoms;
}

AtomVector atoms_closed_form(std::span<const double> profile, const AntichainLattice& lattice) {
  AtomVector atoms(lattice.size(), 0.0);
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const auto& covers = lattice.lower_covers(k);
    if (covers.empty()) {
      atoms[k] = profile[k];
      continue;
    }
    double best = 0.0;
    for (std::size_t b : covers) best = std::max(best, profile[b]);
    atoms[k] = snap(profile[k] - best);
  }
  return atoms;
}

TwoLayerAtoms decompose_pair_two_layer(std::uint32_t l1, std::uint32_t l2, std::uint32_t joint) {
  check_lengths(l1, l2, joint);
  const double f1 = hop_efficiency(l1);
  const double f2 = hop_efficiency(l2);
  TwoLayerAtoms out;
  out.redundancy = std::min(f1, f2);
  out.unique1 = snap(f1 - out.redundancy);
  out.unique2 = snap(f2 - out.redundancy);
  out.synergy = snap(hop_efficiency(joint) - (out.redundancy + out.unique1 + out.unique2));
  return out;
}

std::string_view character_name(Character c) noexcept {
  switch (c) {
    case Character::Redundant: return "Redundant";
    case Character::Unique1: return "Unique1";
    case Character::Unique2: return "Unique2";
    case Character::Synergistic: return "Synergistic";
    case Character::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

Character classify_pair(std::uint32_t l1, std::uint32_t l2, std::uint32_t joint) {
  check_lengths(l1, l2, joint);
  if (!is_finite_length(joint)) return Character::Disconnected;
  const std::uint32_t shortest = std::min(l1, l2);
  const std::uint32_t longest = std::max(l1, l2);
  if (shortest > joint) return Character::Synergistic;
  if (longest > joint) return l1 == joint ? Character::Unique1 : Character::Unique2;
  return Character::Redundant;
}

Dominance dominant_character_general(std::span<const double> atoms, const AntichainLattice& lattice) {
  std::vector<std::size_t> maximal;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (!(atoms[k] > 0.0)) continue;
    bool covered = false;
    for (std::size_t b = k + 1; b < lattice.size() && !covered; ++b)
      covered = atoms[b] > 0.0 && lattice.strictly_precedes(k, b);
    if (!covered) maximal.push_back(k);
  }
  if (maximal.empty()) throw Error(Errc::AllZeroAtoms, "no positive atom (pair disconnected in the joint network)");
  auto least = std::min_element(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = lattice.element(a);
    const auto& y = lattice.element(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), subset_less);
  });
  return {*least, maximal.size() > 1};
}

Character two_layer_character(const AntichainLattice& lattice, std::size_t element) {
  if (lattice.n_layers() != 2) throw Error(Errc::UnsupportedLayerCount, "two-layer character on a non-two-layer lattice");
  if (element == lattice.bottom()) return Character::Redundant;
  if (element == lattice.top()) return Character::Synergistic;
  return lattice.element(element) == Antichain{0b01} ? Character::Unique1 : Character::Unique2;
}

PNDResult decompose_network(const Multiplex& m) {
  PNDResult result;
  auto lattice = std::make_shared<const AntichainLattice>(m.layer_count());
  result.lattice = lattice;
  const std::size_t n = m.node_count();
  result.node_count = n;
  if (n < 2) throw Error(Errc::TooFewNodes, "decomposition needs at least 2 nodes");

  const LayerMask full = m.full_mask();
  std::vector<const DistanceMatrix*> dist(std::size_t{full} + 1, nullptr);
  for (LayerMask a = 1; a <= full; ++a) dist[a] = &m.union_distances(a);

  const std::size_t n_pairs = pair_count(n);
  const std::size_t e = lattice->size();
  result.pair_atoms.assign(n_pairs * e, 0.0);
  result.dominant.assign(n_pairs, kNoCharacter);
  result.ambiguous.assign(n_pairs, 0);
  result.mean_atoms.assign(e, 0.0);

  // Rows of the pair table are independent; the mean is summed afterwards in
  // pair order so it does not depend on the thread count.
  parallel_for(n - 1, [&](std::size_t row) {
    const NodeId i = static_cast<NodeId>(row);
    std::vector<double> eff(std::size_t{full} + 1, 0.0);
    std::size_t p = pair_index(n, i, i + 1);
    for (NodeId j = i + 1; j < n; ++j, ++p) {
      for (LayerMask a = 1; a <= full; ++a) eff[a] = hop_efficiency((*dist[a])(i, j));
      const Profile profile = redundancy_profile(eff, *lattice);
      const AtomVector atoms = moebius_atoms(profile, *lattice);
      std::copy(atoms.begin(), atoms.end(), result.pair_atoms.begin() + static_cast<std::ptrdiff_t>(p * e));
      if ((*dist[full])(i, j) != kUnreachable) {
        const Dominance d = dominant_character_general(atoms, *lattice);
        result.dominant[p] = static_cast<std::int32_t>(d.element);
        result.ambiguous[p] = d.ambiguous ? 1 : 0;
      }
    }
  });
  for (std::size_t p = 0; p < n_pairs; ++p) {
    for (std::size_t k = 0; k < e; ++k) result.mean_atoms[k] += result.pair_atoms[p * e + k];
    result.ambiguous_count += result.ambiguous[p];
  }
  for (double& v : result.mean_atoms) v /= static_cast<double>(n_pairs);
  result.joint_distances = *dist[full];
  result.joint_efficiency = global_efficiency(result.joint_distances);
  return result;
}

}  // namespace pnd
