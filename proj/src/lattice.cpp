#include "pnd/lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pnd/error.hpp"

namespace pnd {

namespace {

std::vector<int> layers_of(LayerMask m) {
  std::vector<int> out;
  for (int k = 0; m != 0; ++k, m >>= 1)
    if (m & 1U) out.push_back(k);
  return out;
}

bool is_subset(LayerMask a, LayerMask b) { return (a & ~b) == 0; }

bool antichain_less(const Antichain& a, const Antichain& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_less);
}

}  // namespace

bool subset_less(LayerMask a, LayerMask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return layers_of(a) < layers_of(b);
}

bool antichain_leq(const Antichain& alpha, const Antichain& beta) {
  return std::all_of(beta.begin(), beta.end(), [&](LayerMask b) {
    return std::any_of(alpha.begin(), alpha.end(), [&](LayerMask a) { return is_subset(a, b); });
  });
}

Antichain minimal_elements(const Antichain& family) {
  Antichain out;
  for (LayerMask a : family) {
    const bool dominated = std::any_of(family.begin(), family.end(),
                                       [&](LayerMask b) { return b != a && is_subset(b, a); });
    if (!dominated && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

AntichainLattice::AntichainLattice(std::size_t n_layers, std::size_t max_layers) : n_layers_(n_layers) {
  if (n_layers < 2 || n_layers > max_layers || n_layers > 5) {
    throw Error(Errc::UnsupportedLayerCount,
                std::to_string(n_layers) + " layers (supported: 2.." + std::to_string(max_layers) + ")");
  }
  const LayerMask full = (LayerMask{1} << n_layers) - 1;
  std::vector<LayerMask> subsets;
  for (LayerMask m = 1; m <= full; ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), subset_less);

  // Every family of non-empty subsets, kept if pairwise incomparable.
  const std::size_t n_subsets = subsets.size();
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << n_subsets); ++family) {
    Antichain a;
    for (std::size_t k = 0; k < n_subsets; ++k)
      if ((family >> k) & 1U) a.push_back(subsets[k]);
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y)
        if (x != y && is_subset(a[x], a[y])) ok = false;
    if (ok) elements_.push_back(std::move(a));
  }

  // Linear extension: rank by the number of elements strictly below, which
  // strictly increases along the order; ties lexicographic.
  const std::size_t n = elements_.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && antichain_leq(elements_[j], elements_[i])) ++rank[i];
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return antichain_less(elements_[a], elements_[b]);
  });
  std::vector<Antichain> sorted;
  sorted.reserve(n);
  for (std::size_t p : perm) sorted.push_back(elements_[p]);
  elements_ = std::move(sorted);

  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = antichain_leq(elements_[i], elements_[j]) ? 1 : 0;

  below_.assign(n, {});
  lower_covers_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!strictly_precedes(b, a)) continue;
      below_[a].push_back(b);
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (strictly_precedes(b, c) && strictly_precedes(c, a)) cover = false;
      if (cover) lower_covers_[a].push_back(b);
    }
  }

  meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Antichain both = elements_[a];
      both.insert(both.end(), elements_[b].begin(), elements_[b].end());
      meet_[a * n + b] = find(minimal_elements(both));
    }
  }
}

std::size_t AntichainLattice::find(Antichain a) const {
  std::sort(a.begin(), a.end(), subset_less);
  auto it = std::find(elements_.begin(), elements_.end(), a);
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<LayerMask> AntichainLattice::used_masks() const {
  std::vector<LayerMask> out;
  for (const auto& a : elements_) out.insert(out.end(), a.begin(), a.end());
  std::sort(out.begin(), out.end(), subset_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string AntichainLattice::label(std::size_t k) const {
  std::string s;
  for (LayerMask m : elements_[k]) {
    s += '{';
    bool first = true;
    for (int layer : layers_of(m)) {
      if (!first) s += ',';
      s += std::to_string(layer + 1);
      first = false;
    }
    s += '}';
  }
  return s;
}

AntichainLattice build_lattice(std::size_t n_layers) { return AntichainLattice(n_layers); }

}  // namespace pnd
