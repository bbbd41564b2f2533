#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pnd/graph.hpp"
#include "pnd/lattice.hpp"

namespace pnd {

/// N edge layers over one shared node set. Union distance matrices are
/// computed lazily per layer subset and cached; the cache is shared between
/// copies and guarded, so concurrent readers are safe.
class Multiplex {
 public:
  /// Throws Error(NodeCountMismatch) when layers disagree on node_count,
  /// Error(UnsupportedLayerCount) for fewer than 2 layers.
  explicit Multiplex(std::vector<Graph> layers, std::vector<std::string> layer_names = {},
                     std::vector<std::string> node_labels = {});

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  const Graph& layer(std::size_t k) const noexcept { return layers_[k]; }
  const std::vector<Graph>& layers() const noexcept { return layers_; }
  const std::vector<std::string>& layer_names() const noexcept { return layer_names_; }
  const std::vector<std::string>& node_labels() const noexcept { return node_labels_; }

  /// Union of the layers in `mask` (bit k = layer k).
  Graph union_of(LayerMask mask) const;
  Graph joint() const { return union_of(full_mask()); }
  LayerMask full_mask() const noexcept { return (LayerMask{1} << layers_.size()) - 1; }

  const DistanceMatrix& union_distances(LayerMask mask) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<LayerMask, std::shared_ptr<const DistanceMatrix>> distances;
  };

  std::size_t node_count_ = 0;
  std::vector<Graph> layers_;
  std::vector<std::string> layer_names_;
  std::vector<std::string> node_labels_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace pnd
