#pragma once

// Null decompositions and the statistics used to compare empirical
// decompositions against them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pnd/multiplex.hpp"
#include "pnd/path_stats.hpp"

namespace pnd {

enum class NullKind { DegreePreserving, DensityMatched };

/// Each replicate rewires every layer independently (Maslov-Sneppen, or an
/// Erdős–Rényi graph with the layer's edge count) and decomposes the result.
std::vector<ModeProportions> null_decompositions(const Multiplex& m, std::size_t n_nulls, std::uint64_t seed,
                                                 NullKind kind = NullKind::DegreePreserving);

enum class Side { TwoSided, Greater, Less };

std::string_view side_name(Side s) noexcept;

inline constexpr std::size_t kDefaultPermutations = 10000;
inline constexpr std::size_t kDefaultBootstrap = 10000;

struct StatReport {
  double p_value = 1.0;
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double hedges_g = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
  std::size_t n_permutations = 0;
  std::string_view test_mode;
  Side side = Side::TwoSided;
  double mean_real = 0.0, sd_real = 0.0;
  double mean_null = 0.0, sd_null = 0.0;
};

/// Sign-flip permutation test of the paired t statistic, p = (extreme + 1)/(n_perm + 1).
/// Fills p_value, t_statistic, degrees_of_freedom and the descriptive fields.
/// Throws Error(LengthMismatch) for unequal or too short (< 2) inputs.
StatReport permutation_paired_test(std::span<const double> real, std::span<const double> null,
                                   std::size_t n_perm, std::uint64_t seed, Side side = Side::TwoSided);

/// (number of population values at least as extreme as observed + 1)/(size + 1);
/// ties count as extreme. Two-sided doubles the smaller one-sided p, capped at 1.
double empirical_p_vs_population(double observed, std::span<const double> population, Side side);

struct EffectSize {
  double g = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
};

/// Hedges' g = (mean_real - mean_null) / pooled_sd * (1 - 3/(4 df - 1)).
double hedges_g_point(std::span<const double> real, std::span<const double> null);

/// Hedges' g with a bias-corrected percentile bootstrap interval. `paired`
/// resamples index-aligned pairs jointly. The interval always contains g.
/// Throws Error(ZeroVariance) when both samples are constant.
EffectSize hedges_g(std::span<const double> real, std::span<const double> null, std::size_t n_boot,
                    std::uint64_t seed, bool paired = false, double confidence = 0.95);

/// Permutation paired test plus Hedges' g, one row of a real-vs-null table.
StatReport paired_comparison(std::span<const double> real, std::span<const double> null, std::size_t n_perm,
                             std::uint64_t seed, Side side = Side::TwoSided);

}  // namespace pnd
