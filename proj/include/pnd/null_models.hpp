#pragma once

// Random graph generators, degree-preserving rewiring, small-world
// propensity, and the density / rewiring sweeps built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnd/graph.hpp"

namespace pnd {

/// round(density * n(n-1)/2), half away from zero. Throws Error(InvalidDensity).
std::size_t edges_for_density(std::size_t n, double density);

/// Exactly edges_for_density(n, density) distinct edges, uniformly without replacement.
Graph erdos_renyi(std::size_t n, double density, std::uint64_t seed);
Graph erdos_renyi_edges(std::size_t n, std::size_t edge_count, std::uint64_t seed);

/// Ring lattice: every node linked to its k nearest ring neighbours on each
/// side, with the remaining edges placed at ring distance k+1 at evenly spaced
/// start nodes.
Graph ring_lattice(std::size_t n, double density);
Graph ring_lattice_edges(std::size_t n, std::size_t edge_count);

struct RewireResult {
  Graph graph;
  std::size_t accepted_swaps = 0;
  std::size_t requested_swaps = 0;
  bool incomplete = false;  // fewer accepted swaps than requested (e.g. no valid swap exists)
};

inline constexpr double kDefaultSwapFactor = 10.0;

/// Maslov-Sneppen double-edge swaps: (a,b),(c,d) -> (a,d),(c,b), rejected when
/// they would create a self-loop or a duplicate edge.
RewireResult maslov_sneppen_rewire(const Graph& g, double swap_factor, std::uint64_t seed);

struct PartialRewireResult {
  Graph graph;
  double achieved_fraction = 0.0;
  bool target_unreachable = false;
};

/// Degree-preserving swaps until at least fraction * |E| edges differ from g.
PartialRewireResult partial_rewire(const Graph& g, double fraction, std::uint64_t seed);

struct SWPReport {
  double swp = 0.0;
  double delta_c = 0.0;
  double delta_l = 0.0;
  double c_obs = 0.0, l_obs = 0.0;
  double c_latt = 0.0, l_latt = 0.0;
  double c_rand = 0.0, l_rand = 0.0;
  bool largest_component_only = false;
  bool degenerate_references = false;
};

inline constexpr std::size_t kSwpRandomReferences = 10;

/// Small-world propensity against a ring lattice and the mean of 10
/// Erdős–Rényi graphs with the same node and edge counts.
SWPReport small_world_propensity(const Graph& g, std::uint64_t seed);

struct SweepRecord {
  double density_a = 0.0;
  double density_b = 0.0;
  double rewire_fraction = 0.0;
  double achieved_fraction = 0.0;  // mean over replicates
  std::vector<std::string> labels;
  std::vector<double> fractions;  // mean mode proportions over replicates
  std::optional<double> swp;
  std::size_t replicates = 0;
  std::size_t flagged = 0;  // replicates with an unreached rewiring target
};

/// Every (density_a, density_b) cell of the grid densities x densities.
std::vector<SweepRecord> er_sweep(std::size_t n, const std::vector<double>& densities, std::size_t replicates,
                                  std::uint64_t seed);

struct RewireSweepConfig {
  std::size_t n = 200;
  double density = 0.05;
  double step = 0.01;
  std::size_t replicates = 10;
  std::uint64_t seed = 0;
};

/// Lattice versus its partially rewired copy for fractions 0, step, ..., 1.
std::vector<SweepRecord> rewire_sweep(const RewireSweepConfig& config);

/// 0, step, 2*step, ... up to and including 1 (within rounding).
std::vector<double> unit_grid(double step, bool include_zero);

}  // namespace pnd
