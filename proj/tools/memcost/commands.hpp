#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "memcost/sweep.hpp"

namespace memcost::cli {

// Stable exit codes, also used by the shell wrapper in main.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;   // validation / ingestion errors
inline constexpr int kExitDegenerateFit = 3;
inline constexpr int kExitResourceCap = 4;  // sweep grid cap

struct CommandIO {
    std::ostream& out;
    std::ostream& err;
};

// Bundled data directory: $MEMCOST_DATA_DIR when set, the compiled-in
// location otherwise.
std::filesystem::path resolve_data_dir();

// A scenario argument is either a path or the name of a bundled scenario
// (resolved as <data>/scenarios/<name>.scenario).
std::filesystem::path resolve_scenario_path(const std::string& arg);

struct SweepOptions {
    std::string curve;  // latency-cost | bandwidth-cost | equal-cost | gain-surface
    std::optional<SweepRange> range;       // per-curve default when unset
    std::optional<double> unit_cost;       // bandwidth-cost line; default from fabric
    std::optional<SweepRange> unit_range;  // gain-surface second axis
    std::optional<std::string> out_path;
};

// One row of the bundled workload table; mfp stays textual ("" = unavailable).
struct WorkloadRow {
    std::string name;
    std::string smt;
    std::string mfp;
    std::string provenance;
};

// name,smt_level,mfp_percent,provenance; provenance is free text and may
// contain commas, so only the first three separators split.
std::vector<WorkloadRow> load_workloads_csv(const std::filesystem::path&);

int cmd_fit(const std::string& dataset_path, bool as_json, const CommandIO& io);
int cmd_analyze(const std::string& scenario_arg, bool as_json,
                const std::optional<std::string>& out_path, const CommandIO& io);
int cmd_sweep(const std::string& scenario_arg, const SweepOptions& options,
              const CommandIO& io);
int cmd_workloads(const CommandIO& io);

}  // namespace memcost::cli
