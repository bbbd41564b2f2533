#pragma once

// Result serialisation. CSV tables use '.' decimals, LF line endings and the
// column orders documented per writer; JSON summaries carry the node-label
// mapping and a config echo.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "pnd/decomposition.hpp"
#include "pnd/multiplex.hpp"
#include "pnd/null_models.hpp"
#include "pnd/path_stats.hpp"
#include "pnd/stats.hpp"

namespace pnd {

nlohmann::ordered_json summary_json(const Multiplex& m, const PNDResult& result, const nlohmann::ordered_json& config);

/// length,pairs,count_<mode>...,fraction_<mode>...
void write_length_profile_csv(const LengthProfile& profile, std::ostream& out);

/// source,target,mode,value for entries with value > threshold, in (i, j) order.
void write_mode_edges_csv(const Multiplex& m, const ModeNetworks& networks, double threshold, std::ostream& out);

/// source,target,joint_length,mode,<atom per element>...
void write_pair_atoms_csv(const Multiplex& m, const PNDResult& result, std::ostream& out);

/// ER sweep: density_a,density_b,replicates,<fraction per mode>...,majority
void write_er_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

/// Rewiring sweep: fraction,achieved_fraction,replicates,flagged,<fraction per mode>...,swp
void write_rewire_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out);

/// replicate,<fraction per mode>...
void write_nulls_csv(const std::vector<ModeProportions>& nulls, std::ostream& out);

nlohmann::ordered_json stat_report_json(const StatReport& report);

/// Writes summary.json, length_profile.csv, mode_edges.csv and pair_atoms.csv into dir.
void write_result_bundle(const std::filesystem::path& dir, const Multiplex& m, const PNDResult& result,
                         const nlohmann::ordered_json& config, double threshold = 0.0);

}  // namespace pnd
