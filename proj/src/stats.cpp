#include "pnd/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "pnd/decomposition.hpp"
#include "pnd/error.hpp"
#include "pnd/null_models.hpp"
#include "pnd/parallel.hpp"
#include "pnd/rng.hpp"

namespace pnd {

namespace {

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double sd_of(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double mu = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

void check_finite(std::span<const double> x, const char* what) {
  for (double v : x)
    if (!std::isfinite(v)) throw Error(Errc::InvalidArgument, std::string(what) + " contains a non-finite value");
}

// t statistic of a one-sample test on values whose sum is `sum` and sum of
// squares `sum_sq`; a zero-variance sample maps to 0 or +-infinity.
double one_sample_t(double sum, double sum_sq, std::size_t n) {
  const auto nn = static_cast<double>(n);
  const double mean = sum / nn;
  const double var = std::max(0.0, (sum_sq - sum * mean) / (nn - 1.0));
  if (var <= 1e-24 * std::max(1.0, sum_sq)) {
    if (mean == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), mean);
  }
  return mean / std::sqrt(var / nn);
}

bool at_least_as_extreme(double t, double observed, Side side) {
  const double slack = 1e-12 * std::max(1.0, std::isfinite(observed) ? std::abs(observed) : 1.0);
  switch (side) {
    case Side::Greater: return t >= observed - slack;
    case Side::Less: return t <= observed + slack;
    case Side::TwoSided: return std::abs(t) >= std::abs(observed) - slack;
  }
  return false;
}

}  // namespace

std::string_view side_name(Side s) noexcept {
  switch (s) {
    case Side::TwoSided: return "two-sided";
    case Side::Greater: return "greater";
    case Side::Less: return "less";
  }
  return "two-sided";
}

std::vector<ModeProportions> null_decompositions(const Multiplex& m, std::size_t n_nulls, std::uint64_t seed,
                                                 NullKind kind) {
  if (n_nulls == 0) throw Error(Errc::InvalidArgument, "at least one null replicate is required");
  std::vector<ModeProportions> out(n_nulls);
  parallel_for(n_nulls, [&](std::size_t r) {
    std::vector<Graph> layers;
    layers.reserve(m.layer_count());
    for (std::size_t k = 0; k < m.layer_count(); ++k) {
      const std::uint64_t s = derive_seed(seed, {r, k});
      if (kind == NullKind::DegreePreserving) {
        layers.push_back(maslov_sneppen_rewire(m.layer(k), kDefaultSwapFactor, s).graph);
      } else {
        layers.push_back(erdos_renyi_edges(m.node_count(), m.layer(k).edge_count(), s));
      }
    }
    out[r] = mode_proportions(decompose_network(Multiplex(std::move(layers), m.layer_names(), m.node_labels())));
  });
  return out;
}

StatReport permutation_paired_test(std::span<const double> real, std::span<const double> null, std::size_t n_perm,
                                   std::uint64_t seed, Side side) {
  if (real.size() != null.size() || real.size() < 2) {
    throw Error(Errc::LengthMismatch, "paired test needs two samples of equal length >= 2");
  }
  check_finite(real, "real sample");
  check_finite(null, "null sample");
  const std::size_t n = real.size();
  std::vector<double> diff(n);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    diff[k] = real[k] - null[k];
    sum += diff[k];
    sum_sq += diff[k] * diff[k];
  }

  StatReport r;
  r.test_mode = "paired-permutation";
  r.side = side;
  r.n_permutations = n_perm;
  r.degrees_of_freedom = static_cast<double>(n - 1);
  r.t_statistic = one_sample_t(sum, sum_sq, n);
  r.mean_real = mean_of(real);
  r.sd_real = sd_of(real);
  r.mean_null = mean_of(null);
  r.sd_null = sd_of(null);

  Rng rng(seed);
  std::size_t extreme = 0;
  for (std::size_t p = 0; p < n_perm; ++p) {
    double flipped = 0.0;
    for (std::size_t k = 0; k < n; k += 64) {
      std::uint64_t bits = rng();
      for (std::size_t b = k; b < std::min(n, k + 64); ++b, bits >>= 1) flipped += (bits & 1U) ? -diff[b] : diff[b];
    }
    if (at_least_as_extreme(one_sample_t(flipped, sum_sq, n), r.t_statistic, side)) ++extreme;
  }
  r.p_value = static_cast<double>(extreme + 1) / static_cast<double>(n_perm + 1);
  return r;
}

double empirical_p_vs_population(double observed, std::span<const double> population, Side side) {
  if (population.empty()) throw Error(Errc::EmptyPopulation, "empty null population");
  std::size_t ge = 0, le = 0;
  for (double v : population) {
    ge += v >= observed ? 1 : 0;
    le += v <= observed ? 1 : 0;
  }
  const auto denom = static_cast<double>(population.size() + 1);
  const double p_greater = static_cast<double>(ge + 1) / denom;
  const double p_less = static_cast<double>(le + 1) / denom;
  switch (side) {
    case Side::Greater: return p_greater;
    case Side::Less: return p_less;
    case Side::TwoSided: return std::min(1.0, 2.0 * std::min(p_greater, p_less));
  }
  return 1.0;
}

double hedges_g_point(std::span<const double> real, std::span<const double> null) {
  if (real.size() < 2 || null.size() < 2) throw Error(Errc::LengthMismatch, "Hedges' g needs two samples of size >= 2");
  const auto n1 = static_cast<double>(real.size());
  const auto n2 = static_cast<double>(null.size());
  const double s1 = sd_of(real);
  const double s2 = sd_of(null);
  const double df = n1 + n2 - 2.0;
  const double pooled = std::sqrt(((n1 - 1.0) * s1 * s1 + (n2 - 1.0) * s2 * s2) / df);
  if (pooled == 0.0) throw Error(Errc::ZeroVariance, "both samples are constant");
  const double correction = 1.0 - 3.0 / (4.0 * df - 1.0);
  return (mean_of(real) - mean_of(null)) / pooled * correction;
}

EffectSize hedges_g(std::span<const double> real, std::span<const double> null, std::size_t n_boot,
                    std::uint64_t seed, bool paired, double confidence) {
  check_finite(real, "real sample");
  check_finite(null, "null sample");
  if (paired && real.size() != null.size()) throw Error(Errc::LengthMismatch, "paired samples differ in length");
  EffectSize out;
  out.g = hedges_g_point(real, null);
  out.ci_lower = out.ci_upper = out.g;
  if (n_boot == 0) return out;

  Rng rng(seed);
  std::vector<double> boot;
  boot.reserve(n_boot);
  std::vector<double> a(real.size()), b(null.size());
  std::uniform_int_distribution<std::size_t> pick_a(0, real.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_b(0, null.size() - 1);
  for (std::size_t k = 0; k < n_boot; ++k) {
    if (paired) {
      for (std::size_t x = 0; x < a.size(); ++x) {
        const std::size_t idx = pick_a(rng);
        a[x] = real[idx];
        b[x] = null[idx];
      }
    } else {
      for (double& v : a) v = real[pick_a(rng)];
      for (double& v : b) v = null[pick_b(rng)];
    }
    try {
      boot.push_back(hedges_g_point(a, b));
    } catch (const Error&) {
      // constant resample; no g defined
    }
  }
  if (boot.empty()) return out;
  std::sort(boot.begin(), boot.end());

  const auto nb = static_cast<double>(boot.size());
  const double below = static_cast<double>(std::lower_bound(boot.begin(), boot.end(), out.g) - boot.begin());
  const double equal = static_cast<double>(std::upper_bound(boot.begin(), boot.end(), out.g) - boot.begin()) - below;
  const double prop = std::clamp((below + 0.5 * equal) / nb, 0.5 / nb, 1.0 - 0.5 / nb);

  const boost::math::normal std_normal;
  const double z0 = boost::math::quantile(std_normal, prop);
  const double alpha = 1.0 - confidence;
  const double z_lo = boost::math::quantile(std_normal, alpha / 2.0);
  const double z_hi = boost::math::quantile(std_normal, 1.0 - alpha / 2.0);
  auto percentile = [&](double q) {
    const double pos = std::clamp(q, 0.0, 1.0) * (nb - 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, boot.size() - 1);
    return boot[lo] + (pos - static_cast<double>(lo)) * (boot[hi] - boot[lo]);
  };
  out.ci_lower = std::min(out.g, percentile(boost::math::cdf(std_normal, 2.0 * z0 + z_lo)));
  out.ci_upper = std::max(out.g, percentile(boost::math::cdf(std_normal, 2.0 * z0 + z_hi)));
  return out;
}

StatReport paired_comparison(std::span<const double> real, std::span<const double> null, std::size_t n_perm,
                             std::uint64_t seed, Side side) {
  StatReport r = permutation_paired_test(real, null, n_perm, derive_seed(seed, {0}), side);
  const EffectSize es = hedges_g(real, null, kDefaultBootstrap, derive_seed(seed, {1}), true);
  r.hedges_g = es.g;
  r.ci_lower = es.ci_lower;
  r.ci_upper = es.ci_upper;
  return r;
}

}  // namespace pnd
