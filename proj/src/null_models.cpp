#include "pnd/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "pnd/decomposition.hpp"
#include "pnd/error.hpp"
#include "pnd/parallel.hpp"
#include "pnd/path_stats.hpp"
#include "pnd/rng.hpp"

namespace pnd {

namespace {

std::uint64_t edge_key(NodeId i, NodeId j) {
  if (i > j) std::swap(i, j);
  return (std::uint64_t{i} << 32) | j;
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(Errc::InvalidDensity, "density " + std::to_string(density) + " outside [0, 1]");
  }
}

}  // namespace

std::size_t edges_for_density(std::size_t n, double density) {
  check_density(density);
  return static_cast<std::size_t>(std::llround(density * static_cast<double>(pair_count(n))));
}

Graph erdos_renyi_edges(std::size_t n, std::size_t edge_count, std::uint64_t seed) {
  const std::size_t total = pair_count(n);
  if (edge_count > total) throw Error(Errc::InvalidDensity, "more edges than node pairs");
  Rng rng(seed);
  // Floyd's sampling of edge_count distinct pair indices.
  std::unordered_set<std::size_t> chosen;
  chosen.reserve(edge_count * 2);
  std::vector<std::size_t> picked;
  picked.reserve(edge_count);
  for (std::size_t j = total - edge_count; j < total; ++j) {
    const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
    const std::size_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    picked.push_back(pick);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  // Walk the sorted indices alongside the pair enumeration.
  std::size_t i = 0, row_start = 0, row_len = n - 1;
  for (std::size_t k : picked) {
    while (k >= row_start + row_len) {
      row_start += row_len;
      ++i;
      --row_len;
    }
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1 + (k - row_start)));
  }
  return Graph(n, edges);
}

Graph erdos_renyi(std::size_t n, double density, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::TooFewNodes, "Erdős–Rényi graph needs at least 2 nodes");
  return erdos_renyi_edges(n, edges_for_density(n, density), seed);
}

Graph ring_lattice_edges(std::size_t n, std::size_t edge_count) {
  if (n < 3) throw Error(Errc::TooFewNodes, "ring lattice needs at least 3 nodes");
  if (edge_count > pair_count(n)) throw Error(Errc::InvalidDensity, "more edges than node pairs");
  const std::size_t k = edge_count / n;
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::size_t d = 1; d <= k; ++d)
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>((v + d) % n));

  const std::size_t leftover = edge_count - k * n;
  if (leftover > 0) {
    const std::size_t d = k + 1;
    // At distance n/2 the edges (v, v+d) and (v+d, v) coincide.
    const std::size_t candidates = (2 * d == n) ? n / 2 : n;
    for (std::size_t t = 0; t < leftover; ++t) {
      const std::size_t v = t * candidates / leftover;
      edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>((v + d) % n));
    }
  }
  return Graph(n, edges);
}

Graph ring_lattice(std::size_t n, double density) {
  if (n < 3) throw Error(Errc::TooFewNodes, "ring lattice needs at least 3 nodes");
  return ring_lattice_edges(n, edges_for_density(n, density));
}

RewireResult maslov_sneppen_rewire(const Graph& g, double swap_factor, std::uint64_t seed) {
  RewireResult out;
  std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  out.requested_swaps = static_cast<std::size_t>(std::llround(std::max(0.0, swap_factor) * static_cast<double>(m)));
  if (m < 2) {
    out.graph = g;
    out.incomplete = out.requested_swaps > 0;
    return out;
  }
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (auto [i, j] : edges) present.insert(edge_key(i, j));

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  const std::size_t max_attempts = 100 * out.requested_swaps + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.accepted_swaps < out.requested_swaps; ++attempt) {
    const std::size_t p = pick(rng);
    const std::size_t q = pick(rng);
    if (p == q) continue;
    auto [a, b] = edges[p];
    auto [c, d] = edges[q];
    if (rng() & 1U) std::swap(c, d);
    if (a == d || c == b) continue;
    if (present.count(edge_key(a, d)) || present.count(edge_key(c, b))) continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    edges[p] = {a, d};
    edges[q] = {c, b};
    ++out.accepted_swaps;
  }
  out.incomplete = out.accepted_swaps < out.requested_swaps;
  out.graph = Graph(g.node_count(), edges);
  return out;
}

PartialRewireResult partial_rewire(const Graph& g, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error(Errc::InvalidArgument, "rewiring fraction outside [0, 1]");
  }
  PartialRewireResult out;
  std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  const auto target = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(m) - 1e-9));
  if (target == 0 || m < 2) {
    out.graph = g;
    out.target_unreachable = target > 0;
    return out;
  }

  std::unordered_set<std::uint64_t> original;
  std::unordered_set<std::uint64_t> present;
  for (auto [i, j] : edges) {
    original.insert(edge_key(i, j));
    present.insert(edge_key(i, j));
  }
  std::vector<std::uint8_t> is_original(m, 1);
  std::size_t differing = 0;

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  const std::size_t max_attempts = 200 * m + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && differing < target; ++attempt) {
    // Prefer an edge not yet rewired as the first swap partner.
    std::size_t p = pick(rng);
    for (int tries = 0; tries < 64 && !is_original[p]; ++tries) p = pick(rng);
    const std::size_t q = pick(rng);
    if (p == q) continue;
    auto [a, b] = edges[p];
    auto [c, d] = edges[q];
    if (rng() & 1U) std::swap(c, d);
    if (a == d || c == b) continue;
    if (present.count(edge_key(a, d)) || present.count(edge_key(c, b))) continue;
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    differing -= (is_original[p] ? 0 : 1) + (is_original[q] ? 0 : 1);
    edges[p] = {a, d};
    edges[q] = {c, b};
    is_original[p] = original.count(edge_key(a, d)) ? 1 : 0;
    is_original[q] = original.count(edge_key(c, b)) ? 1 : 0;
    differing += (is_original[p] ? 0 : 1) + (is_original[q] ? 0 : 1);
  }
  out.graph = Graph(g.node_count(), edges);
  out.achieved_fraction = static_cast<double>(differing) / static_cast<double>(m);
  out.target_unreachable = differing < target;
  return out;
}

SWPReport small_world_propensity(const Graph& g, std::uint64_t seed) {
  SWPReport r;
  Graph h = g;
  const auto component = largest_component(g);
  if (component.size() != g.node_count()) {
    h = induced_subgraph(g, component);
    r.largest_component_only = true;
  }
  const std::size_t n = h.node_count();
  const std::size_t m = h.edge_count();
  if (n < 3) throw Error(Errc::TooFewNodes, "small-world propensity needs a component of at least 3 nodes");

  r.c_obs = clustering_coefficient(h);
  r.l_obs = characteristic_path_length(h);

  const Graph lattice = ring_lattice_edges(n, m);
  r.c_latt = clustering_coefficient(lattice);
  r.l_latt = characteristic_path_length(lattice);

  for (std::size_t k = 0; k < kSwpRandomReferences; ++k) {
    const Graph random = erdos_renyi_edges(n, m, derive_seed(seed, {k}));
    r.c_rand += clustering_coefficient(random);
    r.l_rand += characteristic_path_length(random);
  }
  r.c_rand /= static_cast<double>(kSwpRandomReferences);
  r.l_rand /= static_cast<double>(kSwpRandomReferences);

  const double c_span = r.c_latt - r.c_rand;
  const double l_span = r.l_latt - r.l_rand;
  if (c_span == 0.0 || l_span == 0.0) r.degenerate_references = true;
  r.delta_c = c_span == 0.0 ? 0.0 : (r.c_latt - r.c_obs) / c_span;
  r.delta_l = l_span == 0.0 ? 0.0 : (r.l_obs - r.l_rand) / l_span;
  r.delta_c = std::clamp(r.delta_c, 0.0, 1.0);
  r.delta_l = std::clamp(r.delta_l, 0.0, 1.0);
  r.swp = 1.0 - std::sqrt((r.delta_c * r.delta_c + r.delta_l * r.delta_l) / 2.0);
  return r;
}

std::vector<double> unit_grid(double step, bool include_zero) {
  if (!(step > 0.0 && step <= 1.0)) throw Error(Errc::InvalidDensity, "grid step outside (0, 1]");
  const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
  std::vector<double> grid;
  if (include_zero) grid.push_back(0.0);
  for (std::size_t k = 1; k <= count; ++k) grid.push_back(std::min(1.0, static_cast<double>(k) * step));
  return grid;
}

std::vector<SweepRecord> er_sweep(std::size_t n, const std::vector<double>& densities, std::size_t replicates,
                                  std::uint64_t seed) {
  for (double d : densities) check_density(d);
  if (replicates == 0) throw Error(Errc::InvalidArgument, "at least one replicate is required");
  const std::size_t dn = densities.size();
  std::vector<SweepRecord> records(dn * dn);

  parallel_for(dn * dn, [&](std::size_t cell) {
    SweepRecord& rec = records[cell];
    rec.density_a = densities[cell / dn];
    rec.density_b = densities[cell % dn];
    for (std::size_t r = 0; r < replicates; ++r) {
      const Graph a = erdos_renyi(n, rec.density_a, derive_seed(seed, {cell, r, 0}));
      const Graph b = erdos_renyi(n, rec.density_b, derive_seed(seed, {cell, r, 1}));
      const PNDResult res = decompose_network(Multiplex({a, b}));
      const auto modes = [&]() -> std::optional<ModeProportions> {
        try {
          return mode_proportions(res);
        } catch (const Error&) {
          return std::nullopt;
        }
      }();
      if (!modes) continue;  // no reachable pair in this replicate
      if (rec.fractions.empty()) {
        rec.labels = modes->labels;
        rec.fractions.assign(modes->fractions.size(), 0.0);
      }
      for (std::size_t k = 0; k < rec.fractions.size(); ++k) rec.fractions[k] += modes->fractions[k];
      ++rec.replicates;
    }
    for (double& f : rec.fractions) f /= static_cast<double>(std::max<std::size_t>(rec.replicates, 1));
  });
  return records;
}

std::vector<SweepRecord> rewire_sweep(const RewireSweepConfig& config) {
  if (config.replicates == 0) throw Error(Errc::InvalidArgument, "at least one replicate is required");
  const Graph lattice = ring_lattice(config.n, config.density);
  const std::vector<double> fractions = unit_grid(config.step, true);
  std::vector<SweepRecord> records(fractions.size());

  parallel_for(fractions.size(), [&](std::size_t cell) {
    SweepRecord& rec = records[cell];
    rec.density_a = config.density;
    rec.density_b = config.density;
    rec.rewire_fraction = fractions[cell];
    double swp_sum = 0.0;
    for (std::size_t r = 0; r < config.replicates; ++r) {
      const PartialRewireResult rewired = partial_rewire(lattice, rec.rewire_fraction, derive_seed(config.seed, {cell, r, 0}));
      const Multiplex m({lattice, rewired.graph}, {"lattice", "rewired"});
      const ModeProportions modes = mode_proportions(decompose_network(m));
      if (rec.fractions.empty()) {
        rec.labels = modes.labels;
        rec.fractions.assign(modes.fractions.size(), 0.0);
      }
      for (std::size_t k = 0; k < rec.fractions.size(); ++k) rec.fractions[k] += modes.fractions[k];
      rec.achieved_fraction += rewired.achieved_fraction;
      rec.flagged += rewired.target_unreachable ? 1 : 0;
      swp_sum += small_world_propensity(m.joint(), derive_seed(config.seed, {cell, r, 1})).swp;
      ++rec.replicates;
    }
    const auto reps = static_cast<double>(rec.replicates);
    for (double& f : rec.fractions) f /= reps;
    rec.achieved_fraction /= reps;
    rec.swp = swp_sum / reps;
  });
  return records;
}

}  // namespace pnd
