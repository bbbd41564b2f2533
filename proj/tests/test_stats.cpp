#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pnd/error.hpp"
#include "pnd/null_models.hpp"
#include "pnd/stats.hpp"

using namespace pnd;

namespace {

std::vector<double> normal_sample(std::size_t n, double mean, std::mt19937_64& rng) {
  std::normal_distribution<double> d(mean, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("paired permutation test") {
  std::mt19937_64 rng(1);
  const auto a = normal_sample(50, 0.0, rng);
  const StatReport same = permutation_paired_test(a, a, 2000, 3);
  CHECK(same.p_value == 1.0);
  CHECK(same.t_statistic == 0.0);

  std::vector<double> shifted = a;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += 3.0 + 0.1 * std::sin(static_cast<double>(i));
  const StatReport shift = permutation_paired_test(shifted, a, 10000, 3);
  CHECK(shift.p_value < 0.001);
  CHECK(shift.p_value >= 1.0 / 10001.0);
  CHECK(shift.t_statistic > 0.0);
  CHECK(shift.degrees_of_freedom == 49.0);

  const auto b = normal_sample(50, 0.2, rng);
  const StatReport ab = permutation_paired_test(a, b, 5000, 9);
  const StatReport ba = permutation_paired_test(b, a, 5000, 9);
  CHECK(ab.t_statistic == doctest::Approx(-ba.t_statistic));
  CHECK(ab.p_value == ba.p_value);
  CHECK(permutation_paired_test(a, b, 5000, 9).p_value == ab.p_value);

  // One-sided p-values bracket the two-sided one.
  const StatReport greater = permutation_paired_test(shifted, a, 2000, 4, Side::Greater);
  const StatReport less = permutation_paired_test(shifted, a, 2000, 4, Side::Less);
  CHECK(greater.p_value < 0.01);
  CHECK(less.p_value > 0.99);

  CHECK_THROWS_AS(permutation_paired_test(std::vector{1.0, 2.0}, std::vector{1.0}, 10, 0), Error);
  CHECK_THROWS_AS(permutation_paired_test(std::vector{1.0}, std::vector{1.0}, 10, 0), Error);
}

TEST_CASE("paired t statistic matches direct evaluation") {
  const std::vector<double> r{3.1, 2.4, 5.0, 4.4, 3.9, 2.2};
  const std::vector<double> n{2.0, 2.5, 4.1, 3.3, 3.0, 2.0};
  std::vector<double> d(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) d[i] = r[i] - n[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / d.size();
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double t = mean / (std::sqrt(ss / (d.size() - 1)) / std::sqrt(static_cast<double>(d.size())));
  const StatReport rep = permutation_paired_test(r, n, 100, 1);
  CHECK(rep.t_statistic == doctest::Approx(t).epsilon(1e-12));
  // With n = 6 there are only 64 sign patterns, so p cannot be tiny.
  CHECK(rep.p_value > 1.0 / 101.0);
}

TEST_CASE("empirical p against a population") {
  std::vector<double> pop(1000);
  std::iota(pop.begin(), pop.end(), 0.0);
  CHECK(empirical_p_vs_population(5000.0, pop, Side::Greater) == doctest::Approx(1.0 / 1001.0));
  CHECK(empirical_p_vs_population(999.0, pop, Side::Greater) == doctest::Approx(2.0 / 1001.0));
  CHECK(empirical_p_vs_population(499.5, pop, Side::TwoSided) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(empirical_p_vs_population(5000.0, pop, Side::TwoSided) == doctest::Approx(2.0 / 1001.0));
  CHECK(empirical_p_vs_population(-1.0, pop, Side::Less) == doctest::Approx(1.0 / 1001.0));
  CHECK_THROWS_AS(empirical_p_vs_population(1.0, std::vector<double>{}, Side::Greater), Error);
}

TEST_CASE("Hedges' g") {
  // Two-sample case evaluated by hand from the definition.
  const std::vector<double> x{4.0, 5.0, 6.0, 7.0, 8.0};
  const std::vector<double> y{2.0, 3.0, 4.0, 5.0};
  // means 6 and 3.5; variances 2.5 and 5/3; pooled = (4*2.5 + 3*5/3)/7 = 15/7
  const double d = 2.5 / std::sqrt(15.0 / 7.0);
  const double j = 1.0 - 3.0 / (4.0 * 7.0 - 1.0);
  CHECK(hedges_g_point(x, y) == doctest::Approx(d * j).epsilon(1e-14));
  CHECK(hedges_g_point(y, x) == doctest::Approx(-d * j).epsilon(1e-14));

  const EffectSize es = hedges_g(x, y, 2000, 5);
  CHECK(es.g == doctest::Approx(d * j));
  CHECK(es.ci_lower <= es.g);
  CHECK(es.g <= es.ci_upper);
  CHECK(es.ci_lower < es.ci_upper);

  const EffectSize zero = hedges_g(x, x, 500, 5);
  CHECK(zero.g == 0.0);
  CHECK(zero.ci_lower <= 0.0);
  CHECK(zero.ci_upper >= 0.0);
  CHECK_THROWS_AS(hedges_g(std::vector{1.0, 1.0}, std::vector{2.0, 2.0}, 10, 0), Error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = normal_sample(15, 0.3 * (trial % 5 - 2), rng);
    const auto b = normal_sample(15, 0.0, rng);
    const EffectSize e = hedges_g(a, b, 500, static_cast<std::uint64_t>(trial), trial % 2 == 0);
    const double diff = std::accumulate(a.begin(), a.end(), 0.0) - std::accumulate(b.begin(), b.end(), 0.0);
    CHECK((e.g > 0.0) == (diff > 0.0));
    CHECK(e.ci_lower <= e.g);
    CHECK(e.g <= e.ci_upper);
    const EffectSize again = hedges_g(a, b, 500, static_cast<std::uint64_t>(trial), trial % 2 == 0);
    CHECK(again.ci_lower == e.ci_lower);
    CHECK(again.ci_upper == e.ci_upper);
  }
}

TEST_CASE("permutation p-values are super-uniform under the null") {
  std::mt19937_64 rng(2024);
  int rejections = 0;
  const int reps = 500;
  for (int r = 0; r < reps; ++r) {
    const auto a = normal_sample(20, 0.0, rng);
    const auto b = normal_sample(20, 0.0, rng);
    if (permutation_paired_test(a, b, 999, static_cast<std::uint64_t>(r)).p_value <= 0.05) ++rejections;
  }
  MESSAGE("rejection rate " << static_cast<double>(rejections) / reps);
  CHECK(static_cast<double>(rejections) / reps <= 0.07);
}

TEST_CASE("null decompositions") {
  std::mt19937_64 rng(3);
  const Multiplex m({oracle::random_graph(25, 0.15, rng), oracle::random_graph(25, 0.15, rng)});
  const auto nulls = null_decompositions(m, 5, 17);
  REQUIRE(nulls.size() == 5);
  const auto again = null_decompositions(m, 5, 17);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(nulls[k].fractions == again[k].fractions);
    CHECK(std::accumulate(nulls[k].fractions.begin(), nulls[k].fractions.end(), 0.0) == doctest::Approx(1.0));
  }
  const auto density = null_decompositions(m, 3, 17, NullKind::DensityMatched);
  CHECK(density.size() == 3);
}

TEST_CASE("paired comparison report") {
  std::mt19937_64 rng(8);
  const auto a = normal_sample(30, 1.0, rng);
  const auto b = normal_sample(30, 0.0, rng);
  const StatReport rep = paired_comparison(a, b, 2000, 1);
  CHECK(rep.ci_lower <= rep.hedges_g);
  CHECK(rep.hedges_g <= rep.ci_upper);
  CHECK(rep.p_value > 0.0);
  CHECK(rep.p_value <= 1.0);
  CHECK(rep.n_permutations == 2000);
}
