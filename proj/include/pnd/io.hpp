#pragma once

// File formats and dataset preparation.
//
// Multiplex edge list: one `layer_id src dst [weight]` per line, fields
// separated by whitespace or commas. '#' starts a comment; a first line whose
// first field is `layer` or `layer_id` is a header. Node labels are mapped to
// dense indices in first-appearance order across the whole file. The weight
// column, when present, must be numeric and is ignored.
//
// Weighted matrix: CSV, n rows of n non-negative finite reals, symmetric
// within 1e-9; the diagonal is ignored.
//
// Coordinates: one `label x y z` per line, in matrix row order.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnd/graph.hpp"
#include "pnd/multiplex.hpp"

namespace pnd {

/// Parsed edge-list file before layer selection.
struct EdgeListData {
  std::vector<std::string> node_labels;
  std::vector<std::string> layer_ids;  // first-appearance order
  std::vector<Graph> layers;
};

/// Throws Error(ParseError) with the offending line number.
EdgeListData parse_edge_list(std::istream& in);
EdgeListData read_edge_list(const std::filesystem::path& path);

/// Each selection entry names a layer, or several joined by '+' to be merged.
/// An empty selection keeps every layer. Throws Error(UnknownLayer).
Multiplex select_layers(const EdgeListData& data, const std::vector<std::string>& selection);

Multiplex load_multiplex(const std::filesystem::path& path, const std::vector<std::string>& selection = {});

/// Each group (a list of layer names) becomes one layer named "a+b+...",
/// placed where its first member was; layers outside every group are kept.
/// Throws Error(UnknownLayer) or Error(OverlappingGroups).
Multiplex merge_layers(const Multiplex& m, const std::vector<std::vector<std::string>>& groups);

/// Writes `layer src dst` lines in canonical edge order, using node labels when present.
void write_multiplex(const Multiplex& m, std::ostream& out);

class WeightedMatrix {
 public:
  WeightedMatrix() = default;
  explicit WeightedMatrix(std::size_t n) : n_(n), w_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return w_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) noexcept {
    w_[i * n_ + j] = v;
    w_[j * n_ + i] = v;
  }

  friend bool operator==(const WeightedMatrix&, const WeightedMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

WeightedMatrix parse_weighted_matrix(std::istream& in);
WeightedMatrix read_weighted_matrix(const std::filesystem::path& path);
void write_weighted_matrix(const WeightedMatrix& w, std::ostream& out);

struct Coordinates {
  std::vector<std::string> labels;
  std::vector<std::array<double, 3>> xyz;
};

Coordinates parse_coordinates(std::istream& in);
Coordinates read_coordinates(const std::filesystem::path& path);

struct DistanceSplit {
  Multiplex multiplex;        // layers "short" and "long"
  bool remainder_to_long = false;  // quantile * edges was not integral
};

/// Binarises the matrix, orders edges by Euclidean endpoint distance (ties by
/// (i, j)), and puts the shortest floor(quantile * |E|) edges in "short".
/// Throws Error(AlignmentError) when coordinates and matrix disagree.
DistanceSplit split_by_distance(const WeightedMatrix& weights, const Coordinates& coords, double quantile = 0.5);

/// Keeps the target_edge_count largest weights (ties by (i, j)). Throws Error(TargetTooLarge).
Graph density_match_threshold(const WeightedMatrix& weights, std::size_t target_edge_count);

/// Entry kept when strictly more than half of the matrices are non-zero there,
/// as the mean over the non-zero ones. Throws Error(SizeMismatch).
WeightedMatrix consensus_network(const std::vector<WeightedMatrix>& matrices);

/// Shortest round-trip decimal representation ('.' separator, no locale).
std::string format_double(double v);

/// Whitespace/comma separated reals; '#' comments. With a column name, the
/// input is read as CSV with a header and that column is extracted.
std::vector<double> read_values(const std::filesystem::path& path, const std::string& column = {});

}  // namespace pnd
