#include "pnd/path_stats.hpp"

#include "pnd/error.hpp"

namespace pnd {

std::vector<std::string> element_names(const AntichainLattice& lattice) {
  if (lattice.n_layers() == 2) {
    std::vector<std::string> names(lattice.size());
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      switch (two_layer_character(lattice, k)) {
        case Character::Redundant: names[k] = "R"; break;
        case Character::Unique1: names[k] = "U1"; break;
        case Character::Unique2: names[k] = "U2"; break;
        default: names[k] = "S"; break;
      }
    }
    return names;
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < lattice.size(); ++k) names.push_back(lattice.label(k));
  return names;
}

double ModeProportions::fraction(Character c) const {
  if (fractions.size() != 4) throw Error(Errc::UnsupportedLayerCount, "two-layer lookup on a larger lattice");
  switch (c) {
    case Character::Redundant: return fractions[0];
    case Character::Unique1: return fractions[1];
    case Character::Unique2: return fractions[2];
    case Character::Synergistic: return fractions[3];
    case Character::Disconnected: break;
  }
  throw Error(Errc::InvalidArgument, "no proportion for disconnected pairs");
}

ModeProportions mode_proportions(const PNDResult& result) {
  const std::size_t e = result.lattice->size();
  ModeProportions out;
  out.labels = element_names(*result.lattice);
  out.counts.assign(e, 0);
  for (std::int32_t d : result.dominant) {
    if (d == kNoCharacter) continue;
    ++out.counts[static_cast<std::size_t>(d)];
    ++out.reachable_pairs;
  }
  if (out.reachable_pairs == 0) throw Error(Errc::NoReachablePairs, "no pair is reachable in the joint network");
  out.fractions.resize(e);
  for (std::size_t k = 0; k < e; ++k)
    out.fractions[k] = static_cast<double>(out.counts[k]) / static_cast<double>(out.reachable_pairs);
  return out;
}

LengthProfile proportions_by_length(const PNDResult& result) {
  const std::size_t e = result.lattice->size();
  const std::size_t n = result.node_count;
  std::map<std::uint32_t, LengthRow> rows;
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      const std::int32_t d = result.dominant[p];
      if (d == kNoCharacter) continue;
      const std::uint32_t l = result.joint_distances(i, j);
      auto& row = rows[l];
      if (row.counts.empty()) {
        row.length = l;
        row.counts.assign(e, 0);
      }
      ++row.counts[static_cast<std::size_t>(d)];
      ++row.total;
    }
  }
  if (rows.empty()) throw Error(Errc::NoReachablePairs, "no pair is reachable in the joint network");
  LengthProfile out;
  out.labels = element_names(*result.lattice);
  for (auto& [l, row] : rows) {
    row.fractions.resize(e);
    for (std::size_t k = 0; k < e; ++k)
      row.fractions[k] = static_cast<double>(row.counts[k]) / static_cast<double>(row.total);
    out.rows.push_back(std::move(row));
  }
  return out;
}

ModeNetworks edgewise_networks(const PNDResult& result) {
  const std::size_t e = result.lattice->size();
  const std::size_t n = result.node_count;
  ModeNetworks out;
  out.labels = element_names(*result.lattice);
  out.networks.assign(e, PairMeasure(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      const std::int32_t d = result.dominant[p];
      if (d == kNoCharacter) continue;
      const auto k = static_cast<std::size_t>(d);
      out.networks[k].set(i, j, result.atoms(p)[k]);
    }
  }
  return out;
}

}  // namespace pnd
