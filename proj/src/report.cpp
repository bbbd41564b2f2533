#include "pnd/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "pnd/error.hpp"
#include "pnd/io.hpp"

namespace pnd {

namespace {

std::string node_name(const Multiplex& m, std::size_t v) {
  return m.node_labels().empty() ? std::to_string(v) : m.node_labels()[v];
}

// JSON has no infinities; they are emitted as null.
nlohmann::ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  return out;
}

}  // namespace

nlohmann::ordered_json summary_json(const Multiplex& m, const PNDResult& result, const nlohmann::ordered_json& config) {
  const auto names = element_names(*result.lattice);
  nlohmann::ordered_json j;
  j["node_count"] = result.node_count;
  j["layers"] = m.layer_names();
  if (!m.node_labels().empty()) j["node_labels"] = m.node_labels();
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < result.lattice->size(); ++k)
    elements.push_back({{"name", names[k]}, {"antichain", result.lattice->label(k)}});
  j["lattice"] = elements;
  nlohmann::ordered_json atoms;
  for (std::size_t k = 0; k < names.size(); ++k) atoms[names[k]] = result.mean_atoms[k];
  j["atoms"] = atoms;
  j["global_efficiency"] = result.joint_efficiency;
  try {
    const ModeProportions modes = mode_proportions(result);
    nlohmann::ordered_json props;
    for (std::size_t k = 0; k < names.size(); ++k) props[names[k]] = modes.fractions[k];
    j["mode_proportions"] = props;
    j["reachable_pairs"] = modes.reachable_pairs;
  } catch (const Error&) {
    j["mode_proportions"] = nullptr;
    j["reachable_pairs"] = 0;
  }
  j["ambiguous_pairs"] = result.ambiguous_count;
  j["config"] = config;
  return j;
}

void write_length_profile_csv(const LengthProfile& profile, std::ostream& out) {
  out << "length,pairs";
  for (const auto& l : profile.labels) out << ",count_" << l;
  for (const auto& l : profile.labels) out << ",fraction_" << l;
  out << '\n';
  for (const auto& row : profile.rows) {
    out << row.length << ',' << row.total;
    for (std::size_t c : row.counts) out << ',' << c;
    for (double f : row.fractions) out << ',' << format_double(f);
    out << '\n';
  }
}

void write_mode_edges_csv(const Multiplex& m, const ModeNetworks& networks, double threshold, std::ostream& out) {
  out << "source,target,mode,value\n";
  const std::size_t n = m.node_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < networks.networks.size(); ++k) {
        const double v = networks.networks[k](i, j);
        if (v > threshold) {
          out << node_name(m, i) << ',' << node_name(m, j) << ',' << networks.labels[k] << ',' << format_double(v)
              << '\n';
        }
      }
    }
  }
}

void write_pair_atoms_csv(const Multiplex& m, const PNDResult& result, std::ostream& out) {
  const auto names = element_names(*result.lattice);
  out << "source,target,joint_length,mode";
  for (const auto& name : names) out << ',' << name;
  out << '\n';
  const std::size_t n = result.node_count;
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      const std::uint32_t l = result.joint_distances(i, j);
      out << node_name(m, i) << ',' << node_name(m, j) << ',' << (l == kUnreachable ? std::string("inf") : std::to_string(l))
          << ',' << (result.dominant[p] == kNoCharacter ? std::string("none") : names[static_cast<std::size_t>(result.dominant[p])]);
      for (double a : result.atoms(p)) out << ',' << format_double(a);
      out << '\n';
    }
  }
}

void write_er_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  const std::vector<std::string> labels = records.empty() ? std::vector<std::string>{} : records.front().labels;
  out << "density_a,density_b,replicates";
  for (const auto& l : labels) out << ',' << l;
  out << ",majority\n";
  for (const auto& r : records) {
    out << format_double(r.density_a) << ',' << format_double(r.density_b) << ',' << r.replicates;
    for (double f : r.fractions) out << ',' << format_double(f);
    const auto best = std::max_element(r.fractions.begin(), r.fractions.end());
    out << ',' << (best == r.fractions.end() ? std::string("none") : r.labels[static_cast<std::size_t>(best - r.fractions.begin())])
        << '\n';
  }
}

void write_rewire_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  const std::vector<std::string> labels = records.empty() ? std::vector<std::string>{} : records.front().labels;
  out << "fraction,achieved_fraction,replicates,flagged";
  for (const auto& l : labels) out << ',' << l;
  out << ",swp\n";
  for (const auto& r : records) {
    out << format_double(r.rewire_fraction) << ',' << format_double(r.achieved_fraction) << ',' << r.replicates << ','
        << r.flagged;
    for (double f : r.fractions) out << ',' << format_double(f);
    out << ',' << (r.swp ? format_double(*r.swp) : std::string("nan")) << '\n';
  }
}

void write_nulls_csv(const std::vector<ModeProportions>& nulls, std::ostream& out) {
  out << "replicate";
  if (!nulls.empty())
    for (const auto& l : nulls.front().labels) out << ',' << l;
  out << '\n';
  for (std::size_t r = 0; r < nulls.size(); ++r) {
    out << r;
    for (double f : nulls[r].fractions) out << ',' << format_double(f);
    out << '\n';
  }
}

nlohmann::ordered_json stat_report_json(const StatReport& report) {
  nlohmann::ordered_json j;
  j["test_mode"] = std::string(report.test_mode);
  j["side"] = std::string(side_name(report.side));
  j["p_value"] = report.p_value;
  j["t_statistic"] = finite_or_null(report.t_statistic);
  j["degrees_of_freedom"] = report.degrees_of_freedom;
  j["hedges_g"] = finite_or_null(report.hedges_g);
  j["ci_lower"] = finite_or_null(report.ci_lower);
  j["ci_upper"] = finite_or_null(report.ci_upper);
  j["n_permutations"] = report.n_permutations;
  j["real_mean"] = report.mean_real;
  j["real_sd"] = report.sd_real;
  j["null_mean"] = report.mean_null;
  j["null_sd"] = report.sd_null;
  return j;
}

void write_result_bundle(const std::filesystem::path& dir, const Multiplex& m, const PNDResult& result,
                         const nlohmann::ordered_json& config, double threshold) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + dir.string() + ": " + ec.message());
  {
    auto out = open_output(dir / "summary.json");
    out << summary_json(m, result, config).dump(2) << '\n';
  }
  {
    auto out = open_output(dir / "length_profile.csv");
    try {
      write_length_profile_csv(proportions_by_length(result), out);
    } catch (const Error&) {
      out << "length,pairs\n";
    }
  }
  {
    auto out = open_output(dir / "mode_edges.csv");
    write_mode_edges_csv(m, edgewise_networks(result), threshold, out);
  }
  {
    auto out = open_output(dir / "pair_atoms.csv");
    write_pair_atoms_csv(m, result, out);
  }
}

}  // namespace pnd
