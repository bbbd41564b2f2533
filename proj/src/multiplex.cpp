#include "pnd/multiplex.hpp"

#include "pnd/error.hpp"

namespace pnd {

Multiplex::Multiplex(std::vector<Graph> layers, std::vector<std::string> layer_names,
                     std::vector<std::string> node_labels)
    : layers_(std::move(layers)), layer_names_(std::move(layer_names)), node_labels_(std::move(node_labels)) {
  if (layers_.size() < 2) {
    throw Error(Errc::UnsupportedLayerCount, "a multiplex needs at least 2 layers, got " +
                                                 std::to_string(layers_.size()));
  }
  if (layers_.size() > 31) throw Error(Errc::UnsupportedLayerCount, "too many layers");
  node_count_ = layers_.front().node_count();
  for (const auto& g : layers_) {
    if (g.node_count() != node_count_) {
      throw Error(Errc::NodeCountMismatch, "layers with " + std::to_string(node_count_) + " and " +
                                               std::to_string(g.node_count()) + " nodes");
    }
  }
  if (layer_names_.empty()) {
    for (std::size_t k = 0; k < layers_.size(); ++k) layer_names_.push_back(std::to_string(k + 1));
  }
  if (layer_names_.size() != layers_.size()) {
    throw Error(Errc::SizeMismatch, "layer name count does not match layer count");
  }
  if (!node_labels_.empty() && node_labels_.size() != node_count_) {
    throw Error(Errc::SizeMismatch, "node label count does not match node count");
  }
}

Graph Multiplex::union_of(LayerMask mask) const {
  std::vector<Graph> picked;
  for (std::size_t k = 0; k < layers_.size(); ++k)
    if ((mask >> k) & 1U) picked.push_back(layers_[k]);
  if (picked.empty()) return Graph(node_count_, {});
  if (picked.size() == 1) return picked.front();
  return union_graphs(picked);
}

const DistanceMatrix& Multiplex::union_distances(LayerMask mask) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->distances[mask];
  if (!slot) slot = std::make_shared<const DistanceMatrix>(all_pairs_distances(union_of(mask)));
  return *slot;
}

}  // namespace pnd
