#include "pnd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <cmath>
#include <limits>

#include "CLI11.hpp"
#include "pnd/decomposition.hpp"
#include "pnd/error.hpp"
#include "pnd/io.hpp"
#include "pnd/null_models.hpp"
#include "pnd/path_stats.hpp"
#include "pnd/report.hpp"
#include "pnd/rng.hpp"
#include "pnd/stats.hpp"

namespace pnd {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PND_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::IoError, "cannot write " + path);
  fn(file);
}

struct MultiplexArgs {
  std::string path;
  std::vector<std::string> layers;
  std::vector<std::string> merges;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--multiplex", path, "multiplex edge-list file")->required();
    cmd->add_option("--layers", layers, "layers to keep; 'a+b' merges")->delimiter(',');
    cmd->add_option("--merge", merges, "merge layers into one, e.g. 2+3 (repeatable)");
  }

  Multiplex load() const {
    const EdgeListData data = read_edge_list(path);
    if (merges.empty()) return select_layers(data, layers);
    std::vector<std::vector<std::string>> groups;
    for (const auto& g : merges) groups.push_back(split_on(g, '+'));
    const Multiplex merged = merge_layers(select_layers(data, {}), groups);
    if (layers.empty()) return merged;
    std::vector<Graph> picked;
    for (const auto& id : layers) {
      const auto& names = merged.layer_names();
      auto it = std::find(names.begin(), names.end(), id);
      if (it == names.end()) throw Error(Errc::UnknownLayer, "no layer '" + id + "' after merging");
      picked.push_back(merged.layer(static_cast<std::size_t>(it - names.begin())));
    }
    return Multiplex(std::move(picked), layers, merged.node_labels());
  }
};

Side parse_side(const std::string& s) {
  if (s == "greater") return Side::Greater;
  if (s == "less") return Side::Less;
  return Side::TwoSided;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial network decomposition of multiplex shortest-path efficiency", "pnd"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "decompose a multiplex and write a result bundle");
  MultiplexArgs dec_in;
  dec_in.add_to(decompose);
  std::string out_dir;
  double threshold = 0.0;
  decompose->add_option("--out", out_dir, "output directory")->required();
  decompose->add_option("--seed", seed, "seed (echoed in the summary)");
  decompose->add_option("--threshold", threshold, "only write mode edges above this value");

  // split
  auto* split = app.add_subcommand("split", "split a weighted matrix into short- and long-range layers");
  std::string matrix_path, coords_path, split_out;
  double quantile = 0.5;
  split->add_option("--matrix", matrix_path, "weighted matrix CSV")->required();
  split->add_option("--coords", coords_path, "node coordinates")->required();
  split->add_option("--quantile", quantile, "fraction of edges in the short layer")->check(CLI::Range(0.0, 1.0));
  split->add_option("--out", split_out, "output multiplex file (default: stdout)");

  // sweep-er
  auto* sweep_er = app.add_subcommand("sweep-er", "Erdős–Rényi density sweep");
  std::size_t er_n = 200, er_reps = 10;
  double er_step = 0.01;
  std::string er_out;
  sweep_er->add_option("--n", er_n, "nodes")->check(CLI::Range(2, 1 << 20));
  sweep_er->add_option("--step", er_step, "density step")->check(CLI::Range(1e-6, 1.0));
  sweep_er->add_option("--replicates", er_reps, "replicates per cell")->check(CLI::Range(1, 1 << 20));
  sweep_er->add_option("--seed", seed, "seed");
  sweep_er->add_option("--out", er_out, "output CSV (default: stdout)");

  // sweep-rewire
  auto* sweep_rw = app.add_subcommand("sweep-rewire", "lattice versus partially rewired copy");
  RewireSweepConfig rw;
  std::string rw_out;
  sweep_rw->add_option("--n", rw.n, "nodes")->check(CLI::Range(3, 1 << 20));
  sweep_rw->add_option("--density", rw.density, "lattice density")->check(CLI::Range(0.0, 1.0));
  sweep_rw->add_option("--step", rw.step, "rewiring fraction step")->check(CLI::Range(1e-6, 1.0));
  sweep_rw->add_option("--replicates", rw.replicates, "replicates per fraction")->check(CLI::Range(1, 1 << 20));
  sweep_rw->add_option("--seed", seed, "seed");
  sweep_rw->add_option("--out", rw_out, "output CSV (default: stdout)");

  // nulls
  auto* nulls = app.add_subcommand("nulls", "mode proportions of rewired null multiplexes");
  MultiplexArgs null_in;
  null_in.add_to(nulls);
  std::size_t n_nulls = 1000;
  std::string null_kind = "degree", nulls_out;
  nulls->add_option("--n-nulls", n_nulls, "null replicates")->check(CLI::Range(1, 1 << 24));
  nulls->add_option("--kind", null_kind, "degree (degree-preserving) or density (random, same edge count)")
      ->check(CLI::IsMember({"degree", "density"}));
  nulls->add_option("--seed", seed, "seed");
  nulls->add_option("--out", nulls_out, "output CSV (default: stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "compare real values against null values");
  std::string real_path, null_path, column, side_str = "two-sided";
  bool paired = false;
  std::size_t n_perm = kDefaultPermutations, n_boot = kDefaultBootstrap;
  stats->add_option("--real", real_path, "real values")->required();
  stats->add_option("--null", null_path, "null values")->required();
  stats->add_flag("--paired", paired, "paired permutation t-test (else observed vs population)");
  stats->add_option("--n-perm", n_perm, "permutations");
  stats->add_option("--n-boot", n_boot, "bootstrap resamples for the Hedges' g interval");
  stats->add_option("--column", column, "read this column from CSV inputs with a header");
  stats->add_option("--side", side_str, "two-sided, greater or less")->check(CLI::IsMember({"two-sided", "greater", "less"}));
  stats->add_option("--seed", seed, "seed");

  std::vector<std::string> argv_store{"pnd"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*decompose) {
      const Multiplex m = dec_in.load();
      const PNDResult result = decompose_network(m);
      nlohmann::ordered_json config{{"command", "decompose"}, {"multiplex", dec_in.path}, {"layers", m.layer_names()},
                                    {"merge", dec_in.merges}, {"seed", seed}, {"threshold", threshold}};
      write_result_bundle(out_dir, m, result, config, threshold);
      out << summary_json(m, result, config).dump(2) << '\n';
      if (result.ambiguous_count > 0) {
        err << "note: " << result.ambiguous_count << " pairs have more than one maximal positive atom\n";
      }
    } else if (*split) {
      const DistanceSplit s = split_by_distance(read_weighted_matrix(matrix_path), read_coordinates(coords_path), quantile);
      with_output(split_out, out, [&](std::ostream& o) { write_multiplex(s.multiplex, o); });
      if (s.remainder_to_long) err << "note: edge count not divisible at this quantile; the long layer has the extra edge\n";
    } else if (*sweep_er) {
      const auto records = er_sweep(er_n, unit_grid(er_step, false), er_reps, seed);
      with_output(er_out, out, [&](std::ostream& o) { write_er_sweep_csv(records, o); });
    } else if (*sweep_rw) {
      rw.seed = seed;
      const auto records = rewire_sweep(rw);
      with_output(rw_out, out, [&](std::ostream& o) { write_rewire_sweep_csv(records, o); });
    } else if (*nulls) {
      const Multiplex m = null_in.load();
      const auto kind = null_kind == "density" ? NullKind::DensityMatched : NullKind::DegreePreserving;
      const auto results = null_decompositions(m, n_nulls, seed, kind);
      with_output(nulls_out, out, [&](std::ostream& o) { write_nulls_csv(results, o); });
    } else if (*stats) {
      const auto real = read_values(real_path, column);
      const auto null = read_values(null_path, column);
      const Side side = parse_side(side_str);
      StatReport report;
      if (paired) {
        report = permutation_paired_test(real, null, n_perm, derive_seed(seed, {0}), side);
        try {
          const EffectSize es = hedges_g(real, null, n_boot, derive_seed(seed, {1}), true);
          report.hedges_g = es.g;
          report.ci_lower = es.ci_lower;
          report.ci_upper = es.ci_upper;
        } catch (const Error& e) {
          if (e.code() != Errc::ZeroVariance) throw;
          err << "note: effect size undefined, both samples are constant\n";
          report.hedges_g = report.ci_lower = report.ci_upper = std::numeric_limits<double>::quiet_NaN();
        }
      } else {
        if (real.size() != 1) {
          throw Error(Errc::LengthMismatch, "without --paired, --real must hold exactly one observed value");
        }
        report.test_mode = "population";
        report.side = side;
        report.p_value = empirical_p_vs_population(real.front(), null, side);
        report.n_permutations = null.size();
        report.mean_real = real.front();
        double sum = 0.0;
        for (double v : null) sum += v;
        report.mean_null = sum / static_cast<double>(null.size());
        double ss = 0.0;
        for (double v : null) ss += (v - report.mean_null) * (v - report.mean_null);
        report.sd_null = null.size() > 1 ? std::sqrt(ss / static_cast<double>(null.size() - 1)) : 0.0;
        report.degrees_of_freedom = static_cast<double>(null.size() - 1);
        report.t_statistic = report.sd_null > 0.0 ? (report.mean_real - report.mean_null) / report.sd_null
                                                  : std::numeric_limits<double>::quiet_NaN();
        report.hedges_g = report.ci_lower = report.ci_upper = std::numeric_limits<double>::quiet_NaN();
      }
      out << stat_report_json(report).dump(2) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace pnd
