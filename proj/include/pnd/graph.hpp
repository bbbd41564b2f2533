#pragma once

// Binary undirected graphs, hop-count distances and pair efficiencies.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace pnd {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable binary undirected graph. Edges are stored canonically (i < j),
/// sorted and unique; a bit-row adjacency matrix backs traversal.
class Graph {
 public:
  Graph() = default;

  /// Canonicalises and deduplicates `edges`.
  /// Throws Error(OutOfRange) for an index >= node_count, Error(SelfLoop) for i == j.
  Graph(std::size_t node_count, std::span<const Edge> edges);
  Graph(std::size_t node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(NodeId i, NodeId j) const noexcept;
  std::size_t degree(NodeId v) const noexcept { return neighbours_[v].size(); }
  const std::vector<NodeId>& neighbours(NodeId v) const noexcept { return neighbours_[v]; }
  std::vector<std::size_t> degree_sequence() const;

  // Bit-row view: words_per_row() 64-bit words per node.
  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> adjacency_row(NodeId v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> neighbours_;
  std::vector<std::uint64_t> bits_;
};

Graph build_graph(std::size_t node_count, std::span<const Edge> edges);

/// Edge-set union. Throws Error(NodeCountMismatch).
Graph union_graphs(std::span<const Graph> graphs);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Dense symmetric hop-count matrix, dist(i,i) == 0.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t node_count)
      : n_(node_count), dist_(node_count * node_count, kUnreachable) {}

  std::size_t node_count() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return dist_[i * n_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) noexcept { return dist_[i * n_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const noexcept { return {dist_.data() + i * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
};

/// Symmetric real-valued measure on node pairs; diagonal is 0.
class PairMeasure {
 public:
  PairMeasure() = default;
  explicit PairMeasure(std::size_t node_count) : n_(node_count), value_(node_count * node_count, 0.0) {}

  std::size_t node_count() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return value_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    value_[i * n_ + j] = v;
    value_[j * n_ + i] = v;
  }

  friend bool operator==(const PairMeasure&, const PairMeasure&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> value_;
};

/// Efficiency of a hop count: 1/l, and exactly 0 for kUnreachable.
inline double hop_efficiency(std::uint32_t hops) noexcept {
  return hops == kUnreachable ? 0.0 : 1.0 / static_cast<double>(hops);
}

/// Breadth-first search from every source over the bit-row adjacency.
DistanceMatrix all_pairs_distances(const Graph& g);

PairMeasure efficiency_matrix(const DistanceMatrix& d);

/// Mean pair efficiency over unordered distinct pairs. Throws Error(TooFewNodes) for n < 2.
double global_efficiency(const Graph& g);
double global_efficiency(const DistanceMatrix& d);

/// F(e1 ∪ e2) - F(e2).
double delta_efficiency(const Graph& e1, const Graph& e2);

/// Mean local clustering; nodes of degree < 2 contribute 0. Throws Error(TooFewNodes) for n < 3.
double clustering_coefficient(const Graph& g);

/// Mean hop count over reachable distinct pairs. Throws Error(NoReachablePairs).
double characteristic_path_length(const Graph& g);
double characteristic_path_length(const DistanceMatrix& d);

/// Number of unordered distinct pairs, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Row-major index of pair (i, j), i < j, among the n(n-1)/2 unordered pairs.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// Nodes of the largest connected component (ties: the one holding the smallest node id).
std::vector<NodeId> largest_component(const Graph& g);

/// Subgraph induced by `nodes`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace pnd
