#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critlink/analysis.hpp"
#include "critlink/ingest.hpp"

namespace critlink {

// Exit codes shared by the CLI and the command functions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitPartialFailure = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  std::string input;    // observation file (ingest) or artifact directory
  std::string out_dir = "out";
  ColumnMapping columns;
  char delimiter = ',';
  RepairPolicy repair = RepairPolicy::forward_fill;

  double gamma = 2.0;
  int k = 20;
  std::vector<int> k_list;
  double safety_factor = 100.0;

  SolveMethod method = SolveMethod::anneal_swap;
  AnnealSchedule schedule;
  std::vector<double> percentiles = {90.0, 95.0};
  std::uint64_t seed = 1;
  int workers = 1;
  int top_links = 20;
  bool plots = false;

  std::optional<int> time_step;  // solve / fixed-step ksweep
  SyntheticSpec synthetic;       // generate

  // Hash of the semantic parameters (not paths or worker counts); stamped
  // into every output file.
  std::uint64_t config_hash() const;
  std::string to_json_string() const;  // resolved config, echoed to out_dir
  static RunConfig from_json_string(const std::string& text);
  static RunConfig from_json_file(const std::string& path);

  SolverConfig solver_config() const;
};

struct IngestSummary {
  long long rows_total = 0;
  long long rows_rejected = 0;
  long long duplicate_rows = 0;
  long long repaired_cells = 0;
  int nodes = 0;
  int links = 0;
  int snapshots = 0;
  ConnectivityReport connectivity;
};

int run_generate(const RunConfig& config);
int run_ingest(const RunConfig& config, IngestSummary* summary = nullptr);
int run_solve(const RunConfig& config);
// qubo_file: solve a serialized problem directly instead of artifacts
int run_solve_qubo_file(const RunConfig& config, const std::string& qubo_file);
int run_sweep(const RunConfig& config);
int run_ksweep(const RunConfig& config);

struct GeojsonArgs {
  std::string artifacts_dir;       // directory holding links.csv
  std::string frequency_file;      // one of frequency_file / critical_set_file
  std::string critical_set_file;
  std::string out_file = "critical_links.geojson";
};

int run_export_geojson(const GeojsonArgs& args);

// Loads the artifacts written by run_ingest.
void load_artifacts(const std::string& dir, NetworkTopology& topology, SnapshotSeries& series);

}  // namespace critlink
