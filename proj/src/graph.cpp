#include "pnd/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "pnd/error.hpp"

namespace pnd {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : node_count_(node_count), words_(words_for(node_count)) {
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i >= node_count || j >= node_count) {
      throw Error(Errc::OutOfRange, "edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") with node_count " + std::to_string(node_count));
    }
    if (i == j) throw Error(Errc::SelfLoop, "self-loop at node " + std::to_string(i));
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  neighbours_.assign(node_count_, {});
  bits_.assign(node_count_ * words_, 0);
  for (auto [i, j] : edges_) {
    neighbours_[i].push_back(j);
    neighbours_[j].push_back(i);
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(NodeId i, NodeId j) const noexcept {
  if (i >= node_count_ || j >= node_count_) return false;
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> deg(node_count_);
  for (std::size_t v = 0; v < node_count_; ++v) deg[v] = neighbours_[v].size();
  return deg;
}

Graph build_graph(std::size_t node_count, std::span<const Edge> edges) { return Graph(node_count, edges); }

Graph union_graphs(std::span<const Graph> graphs) {
  if (graphs.empty()) return Graph{};
  const std::size_t n = graphs.front().node_count();
  std::vector<Edge> all;
  for (const auto& g : graphs) {
    if (g.node_count() != n) {
      throw Error(Errc::NodeCountMismatch,
                  "union of graphs with " + std::to_string(n) + " and " + std::to_string(g.node_count()) + " nodes");
    }
    all.insert(all.end(), g.edges().begin(), g.edges().end());
  }
  return Graph(n, all);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t w = g.words_per_row();
  DistanceMatrix d(n);
  std::vector<std::uint64_t> visited(w), frontier(w), next(w);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / 64] |= std::uint64_t{1} << (s % 64);
    frontier[s / 64] |= std::uint64_t{1} << (s % 64);
    d.at(s, s) = 0;

    for (std::uint32_t level = 1;; ++level) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t k = 0; k < w; ++k) {
        for (std::uint64_t bits = frontier[k]; bits != 0; bits &= bits - 1) {
          const auto u = static_cast<NodeId>(k * 64 + std::countr_zero(bits));
          const auto row = g.adjacency_row(u);
          for (std::size_t x = 0; x < w; ++x) next[x] |= row[x];
        }
      }
      bool any = false;
      for (std::size_t k = 0; k < w; ++k) {
        next[k] &= ~visited[k];
        visited[k] |= next[k];
        any = any || next[k] != 0;
        for (std::uint64_t bits = next[k]; bits != 0; bits &= bits - 1) {
          d.at(s, k * 64 + std::countr_zero(bits)) = level;
        }
      }
      if (!any) break;
      frontier.swap(next);
    }
  }
  return d;
}

PairMeasure efficiency_matrix(const DistanceMatrix& d) {
  const std::size_t n = d.node_count();
  PairMeasure e(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.set(i, j, hop_efficiency(d(i, j)));
  return e;
}

double global_efficiency(const DistanceMatrix& d) {
  const std::size_t n = d.node_count();
  if (n < 2) throw Error(Errc::TooFewNodes, "global efficiency needs at least 2 nodes");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += hop_efficiency(d(i, j));
  return sum / static_cast<double>(pair_count(n));
}

double global_efficiency(const Graph& g) {
  if (g.node_count() < 2) throw Error(Errc::TooFewNodes, "global efficiency needs at least 2 nodes");
  return global_efficiency(all_pairs_distances(g));
}

double delta_efficiency(const Graph& e1, const Graph& e2) {
  const Graph both[] = {e1, e2};
  return global_efficiency(union_graphs(both)) - global_efficiency(e2);
}

double clustering_coefficient(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 3) throw Error(Errc::TooFewNodes, "clustering coefficient needs at least 3 nodes");
  const std::size_t w = g.words_per_row();
  double sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t k = g.degree(v);
    if (k < 2) continue;
    const auto row_v = g.adjacency_row(v);
    std::size_t links = 0;  // each neighbour-neighbour edge counted twice
    for (NodeId u : g.neighbours(v)) {
      const auto row_u = g.adjacency_row(u);
      for (std::size_t x = 0; x < w; ++x) links += std::popcount(row_u[x] & row_v[x]);
    }
    sum += static_cast<double>(links) / static_cast<double>(k * (k - 1));
  }
  return sum / static_cast<double>(n);
}

double characteristic_path_length(const DistanceMatrix& d) {
  const std::size_t n = d.node_count();
  double sum = 0.0;
  std::size_t reachable = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) == kUnreachable) continue;
      sum += d(i, j);
      ++reachable;
    }
  if (reachable == 0) throw Error(Errc::NoReachablePairs, "no reachable pair for characteristic path length");
  return sum / static_cast<double>(reachable);
}

double characteristic_path_length(const Graph& g) {
  if (g.node_count() < 2) throw Error(Errc::TooFewNodes, "characteristic path length needs at least 2 nodes");
  return characteristic_path_length(all_pairs_distances(g));
}

std::vector<NodeId> largest_component(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<NodeId>> members;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<NodeId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      members[c].push_back(u);
      for (NodeId v : g.neighbours(u)) {
        if (comp[v] == -1) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
  }
  if (members.empty()) return {};
  auto best = std::max_element(members.begin(), members.end(),
                               [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::sort(best->begin(), best->end());
  return *best;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<std::int64_t> relabel(g.node_count(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) relabel[nodes[k]] = static_cast<std::int64_t>(k);
  std::vector<Edge> edges;
  for (auto [i, j] : g.edges()) {
    if (relabel[i] >= 0 && relabel[j] >= 0) {
      edges.emplace_back(static_cast<NodeId>(relabel[i]), static_cast<NodeId>(relabel[j]));
    }
  }
  return Graph(nodes.size(), edges);
}

}  // namespace pnd
