#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdlib.h>

#include "oracles.hpp"
#include "pnd/decomposition.hpp"
#include "pnd/error.hpp"
#include "pnd/lattice.hpp"
#include "pnd/multiplex.hpp"

using namespace pnd;

namespace {

constexpr std::uint32_t kInf = kUnreachable;

// Layer A is the path 0-1-2, layer B the triangle.
Multiplex unique_b_fixture() {
  return Multiplex({Graph(3, {{0, 1}, {1, 2}}), Graph(3, {{0, 1}, {1, 2}, {0, 2}})});
}

std::size_t idx(const AntichainLattice& L, Antichain a) {
  const std::size_t k = L.find(std::move(a));
  REQUIRE(k < L.size());
  return k;
}

std::uint32_t random_length(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 6);
  const int v = d(rng);
  return v == 0 ? kInf : static_cast<std::uint32_t>(v);
}

}  // namespace

TEST_CASE("lattice sizes match brute-force antichain enumeration") {
  CHECK(build_lattice(2).size() == 4);
  CHECK(build_lattice(3).size() == 18);
  CHECK(oracle::enumerate_antichains(3).size() == 18);
  CHECK(build_lattice(4).size() == oracle::enumerate_antichains(4).size());
  CHECK(build_lattice(4).size() == 166);
  CHECK_THROWS_AS(build_lattice(1), Error);
  CHECK_THROWS_AS(build_lattice(5), Error);
}

TEST_CASE("two-layer lattice order") {
  const auto L = build_lattice(2);
  const std::size_t bot = idx(L, {0b01, 0b10}), a = idx(L, {0b01}), b = idx(L, {0b10}), top = idx(L, {0b11});
  CHECK(bot == L.bottom());
  CHECK(top == L.top());
  CHECK(L.strictly_precedes(bot, a));
  CHECK(L.strictly_precedes(bot, b));
  CHECK(L.strictly_precedes(a, top));
  CHECK(L.strictly_precedes(b, top));
  CHECK_FALSE(L.precedes_or_equal(a, b));
  CHECK_FALSE(L.precedes_or_equal(b, a));
  CHECK(L.meet(a, b) == bot);
  CHECK(L.lower_covers(top).size() == 2);
  CHECK(L.label(bot) == "{1}{2}");
  CHECK(L.label(top) == "{1,2}");
}

TEST_CASE("lattice structure agrees with the order definition") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto L = build_lattice(n);
    const auto brute = oracle::enumerate_antichains(n);
    for (const auto& a : brute) CHECK(L.find(a) < L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = 0; j < L.size(); ++j) {
        const bool leq = antichain_leq(L.element(i), L.element(j));
        REQUIRE(L.precedes_or_equal(i, j) == leq);
        if (leq && i != j) REQUIRE(i < j);  // linear extension
        // meet is the greatest lower bound
        const std::size_t m = L.meet(i, j);
        REQUIRE(L.precedes_or_equal(m, i));
        REQUIRE(L.precedes_or_equal(m, j));
        for (std::size_t k = 0; k < L.size(); ++k)
          if (L.precedes_or_equal(k, i) && L.precedes_or_equal(k, j)) REQUIRE(L.precedes_or_equal(k, m));
      }
      for (std::size_t c : L.lower_covers(i)) {
        REQUIRE(L.strictly_precedes(c, i));
        for (std::size_t k = 0; k < L.size(); ++k)
          REQUIRE_FALSE((L.strictly_precedes(c, k) && L.strictly_precedes(k, i)));
      }
    }
  }
}

TEST_CASE("redundancy profile and atoms of the worked pair") {
  const auto L = build_lattice(2);
  const Multiplex m(std::vector<Graph>{Graph(3, {{0, 1}, {1, 2}}), Graph(3, {{0, 2}})});
  const Profile p = redundancy_profile(m, 0, 2, L);
  CHECK(p[idx(L, {1, 2})] == 0.5);
  CHECK(p[idx(L, {1})] == 0.5);
  CHECK(p[idx(L, {2})] == 1.0);
  CHECK(p[idx(L, {3})] == 1.0);

  const AtomVector atoms = moebius_atoms(p, L);
  CHECK(atoms[idx(L, {1, 2})] == 0.5);
  CHECK(atoms[idx(L, {1})] == 0.0);
  CHECK(atoms[idx(L, {2})] == 0.5);
  CHECK(atoms[idx(L, {3})] == 0.0);
  CHECK(atoms_closed_form(p, L) == atoms);
  CHECK(dominant_character_general(atoms, L).element == idx(L, {2}));
}

TEST_CASE("degenerate profiles") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto L = build_lattice(n);
    const Profile constant(L.size(), 0.25);
    const auto atoms = moebius_atoms(constant, L);
    CHECK(atoms[L.bottom()] == 0.25);
    for (std::size_t k = 1; k < L.size(); ++k) CHECK(atoms[k] == 0.0);
    CHECK(atoms_closed_form(constant, L) == atoms);
    const Profile zero(L.size(), 0.0);
    for (double a : moebius_atoms(zero, L)) CHECK(a == 0.0);
    CHECK_THROWS_AS(dominant_character_general(moebius_atoms(zero, L), L), Error);
  }
  // Identical layers give a constant profile; a pair disconnected everywhere gives zeros.
  const Graph g(4, {{0, 1}, {1, 2}});
  const auto L = build_lattice(2);
  const Multiplex same({g, g});
  for (double v : redundancy_profile(same, 0, 2, L)) CHECK(v == 0.5);
  for (double v : redundancy_profile(same, 0, 3, L)) CHECK(v == 0.0);
}

TEST_CASE("two-layer fast path") {
  auto check = [](std::uint32_t a, std::uint32_t b, std::uint32_t j, TwoLayerAtoms want) {
    CHECK(decompose_pair_two_layer(a, b, j) == want);
  };
  check(2, 1, 1, {0.5, 0.0, 0.5, 0.0});
  check(kInf, kInf, 2, {0.0, 0.0, 0.0, 0.5});
  check(1, 1, 1, {1.0, 0.0, 0.0, 0.0});
  CHECK_THROWS_AS(decompose_pair_two_layer(2, 3, 3), Error);
  CHECK_THROWS_AS(decompose_pair_two_layer(1, 1, 0), Error);

  CHECK(classify_pair(3, 3, 2) == Character::Synergistic);
  CHECK(classify_pair(2, 2, 2) == Character::Redundant);
  CHECK(classify_pair(2, 1, 1) == Character::Unique2);
  CHECK(classify_pair(1, 3, 1) == Character::Unique1);
  CHECK(classify_pair(kInf, kInf, kInf) == Character::Disconnected);
}

TEST_CASE("two-layer fast path equals the lattice path exactly") {
  const auto L = build_lattice(2);
  const std::size_t bot = idx(L, {1, 2}), a = idx(L, {1}), b = idx(L, {2}), top = idx(L, {3});
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 1000) {
    const std::uint32_t la = random_length(rng), lb = random_length(rng), lj = random_length(rng);
    // a joint edge belongs to some layer
    if (lj > std::min(la, lb) || (lj == 1 && std::min(la, lb) != 1)) continue;
    ++checked;
    std::vector<double> eff(4, 0.0);
    eff[1] = hop_efficiency(la);
    eff[2] = hop_efficiency(lb);
    eff[3] = hop_efficiency(lj);
    const Profile p = redundancy_profile(eff, L);
    const AtomVector mob = moebius_atoms(p, L);
    const AtomVector cf = atoms_closed_form(p, L);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(mob[k] - cf[k]) <= 1e-12);
    const TwoLayerAtoms fast = decompose_pair_two_layer(la, lb, lj);
    CHECK(fast.redundancy == mob[bot]);
    CHECK(fast.unique1 == mob[a]);
    CHECK(fast.unique2 == mob[b]);
    CHECK(fast.synergy == mob[top]);
    CHECK((fast.unique1 == 0.0 || fast.unique2 == 0.0));

    const Character c = classify_pair(la, lb, lj);
    if (lj == kInf) {
      CHECK(c == Character::Disconnected);
    } else {
      CHECK(two_layer_character(L, dominant_character_general(mob, L).element) == c);
      if (lj == 1) CHECK(c != Character::Synergistic);
    }
  }
}

TEST_CASE("random lattice profiles: closed form, non-negativity, monotonicity") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto L = build_lattice(n);
    for (int trial = 0; trial < (n == 4 ? 100 : 300); ++trial) {
      const std::size_t nodes = 3 + trial % 8;
      std::vector<Graph> layers;
      for (std::size_t k = 0; k < n; ++k) layers.push_back(oracle::random_graph(nodes, 0.25, rng));
      const Multiplex m(layers);
      for (NodeId i = 0; i < nodes; ++i)
        for (NodeId j = i + 1; j < nodes; ++j) {
          const Profile p = redundancy_profile(m, i, j, L);
          const AtomVector mob = moebius_atoms(p, L);
          const AtomVector cf = atoms_closed_form(p, L);
          double sum = 0.0;
          for (std::size_t k = 0; k < L.size(); ++k) {
            REQUIRE(std::abs(mob[k] - cf[k]) <= 1e-12);
            REQUIRE(mob[k] >= 0.0);
            sum += mob[k];
            for (std::size_t c : L.lower_covers(k)) REQUIRE(p[c] <= p[k]);
          }
          REQUIRE(std::abs(sum - p[L.top()]) <= 1e-12);
        }
    }
  }
}

TEST_CASE("redundancy profile equals path-enumeration oracle") {
  std::mt19937_64 rng(17);
  const auto L = build_lattice(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Graph> layers;
    for (int k = 0; k < 3; ++k) layers.push_back(oracle::random_graph(7, 0.2, rng));
    const Multiplex m(layers);
    for (NodeId i = 0; i < 7; ++i)
      for (NodeId j = i + 1; j < 7; ++j) {
        const Profile p = redundancy_profile(m, i, j, L);
        for (std::size_t k = 0; k < L.size(); ++k)
          REQUIRE(p[k] == oracle::redundancy_by_enumeration(layers, L.element(k), i, j));
      }
  }
}

TEST_CASE("redundancy function axioms") {
  std::mt19937_64 rng(23);
  const auto L = build_lattice(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Graph> layers;
    for (int k = 0; k < 3; ++k) layers.push_back(oracle::random_graph(9, 0.2, rng));
    // Layer 2 contains layer 0 so the deterministic-equality axiom is exercised.
    layers[2] = union_graphs(std::vector{layers[0], layers[2]});
    const Multiplex m(layers);
    for (NodeId i = 0; i < 9; ++i)
      for (NodeId j = i + 1; j < 9; ++j) {
        const Profile p = redundancy_profile(m, i, j, L);
        const auto eff = [&](LayerMask mask) { return p[idx(L, {mask})]; };
        // self-intersection: a single subset is its own union efficiency
        const auto d = m.union_distances(0b101);
        CHECK(eff(0b101) == hop_efficiency(d(i, j)));
        // symmetry: the value depends on the set of arguments only
        CHECK(p[idx(L, {0b010, 0b001})] == p[idx(L, {0b001, 0b010})]);
        // monotonicity: appending an argument cannot increase redundancy
        CHECK(p[idx(L, {0b001, 0b010})] <= eff(0b001));
        CHECK(p[idx(L, {0b001, 0b010, 0b100})] <= p[idx(L, {0b001, 0b010})]);
        // deterministic equality: layer 0 ⊆ layer 2, so {0},{2} reduces to {0}
        CHECK(p[idx(L, {0b001, 0b100})] == eff(0b001));
      }
  }
}

TEST_CASE("dominant character") {
  const auto L2 = build_lattice(2);
  CHECK(dominant_character_general(std::vector{1.0, 0.0, 0.0, 0.0}, L2).element == L2.bottom());
  CHECK(dominant_character_general(std::vector{0.2, 0.3, 0.0, 0.1}, L2).element == L2.top());

  // Two incomparable maximal positive atoms on the 3-layer lattice.
  const auto L3 = build_lattice(3);
  std::vector<double> atoms(L3.size(), 0.0);
  const std::size_t a = idx(L3, {0b001}), b = idx(L3, {0b010});
  atoms[a] = 0.1;
  atoms[b] = 0.2;
  const Dominance d = dominant_character_general(atoms, L3);
  CHECK(d.ambiguous);
  CHECK(d.element == std::min(a, b));
  atoms[idx(L3, {0b011})] = 0.05;
  CHECK_FALSE(dominant_character_general(atoms, L3).ambiguous);
}

TEST_CASE("network decomposition examples") {
  const PNDResult r = decompose_network(unique_b_fixture());
  const auto& L = *r.lattice;
  CHECK(r.mean_atoms[idx(L, {1, 2})] == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(r.mean_atoms[idx(L, {2})] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(r.mean_atoms[idx(L, {1})] == 0.0);
  CHECK(r.mean_atoms[idx(L, {3})] == 0.0);
  CHECK(std::accumulate(r.mean_atoms.begin(), r.mean_atoms.end(), 0.0) == doctest::Approx(1.0));
  CHECK(r.joint_efficiency == doctest::Approx(1.0));

  const PNDResult s = decompose_network(Multiplex({Graph(3, {{0, 1}}), Graph(3, {{1, 2}})}));
  CHECK(s.atoms(0, 2)[s.lattice->top()] == 0.5);
  CHECK(s.mean_atoms[s.lattice->top()] == doctest::Approx(0.5 / 3.0));
  CHECK(std::accumulate(s.mean_atoms.begin(), s.mean_atoms.end(), 0.0) ==
        doctest::Approx(s.joint_efficiency).epsilon(1e-15));

  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const PNDResult same = decompose_network(Multiplex({g, g}));
  CHECK(same.mean_atoms[0] == doctest::Approx(global_efficiency(g)));
  for (std::size_t k = 1; k < 4; ++k) CHECK(same.mean_atoms[k] == 0.0);
  for (std::size_t p = 0; p < pair_count(5); ++p)
    CHECK((same.dominant[p] == 0 || same.dominant[p] == kNoCharacter));
}

TEST_CASE("network decomposition agrees with the two-layer fast path and sums to the joint efficiency") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + trial % 30;
    const Multiplex m({oracle::random_graph(n, 0.08, rng), oracle::random_graph(n, 0.08, rng)});
    const PNDResult r = decompose_network(m);
    const auto& d1 = m.union_distances(0b01);
    const auto& d2 = m.union_distances(0b10);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) {
        const auto fast = decompose_pair_two_layer(d1(i, j), d2(i, j), r.joint_distances(i, j));
        const auto atoms = r.atoms(i, j);
        REQUIRE(atoms[0] == fast.redundancy);
        REQUIRE(atoms[1] == fast.unique1);
        REQUIRE(atoms[2] == fast.unique2);
        REQUIRE(atoms[3] == fast.synergy);
      }
    const double total = std::accumulate(r.mean_atoms.begin(), r.mean_atoms.end(), 0.0);
    CHECK(std::abs(total - global_efficiency(m.joint())) <= 1e-12);
  }
}

TEST_CASE("decomposition does not depend on the worker count") {
  std::mt19937_64 rng(31);
  const Multiplex m({oracle::random_graph(60, 0.05, rng), oracle::random_graph(60, 0.05, rng), oracle::random_graph(60, 0.05, rng)});
  setenv("PND_THREADS", "1", 1);
  const PNDResult serial = decompose_network(m);
  setenv("PND_THREADS", "4", 1);
  const PNDResult threaded = decompose_network(m);
  unsetenv("PND_THREADS");
  CHECK(serial.pair_atoms == threaded.pair_atoms);
  CHECK(serial.mean_atoms == threaded.mean_atoms);
  CHECK(serial.dominant == threaded.dominant);
}
