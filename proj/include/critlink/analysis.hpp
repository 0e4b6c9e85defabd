#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critlink/solver.hpp"

namespace critlink {

struct SolverConfig {
  SolveMethod method = SolveMethod::anneal_swap;
  AnnealSchedule schedule;
  double safety_factor = 100.0;
  ExtractionConfig extraction;
  std::uint64_t seed = 1;
  int workers = 1;
};

struct HorizonEntry {
  int time_step = 0;
  std::vector<int> critical;  // selected links, ascending
  double ndi_abs = 0.0;
  double ndi_gain = 0.0;
  double solve_time_s = 0.0;
  SolveMethod method = SolveMethod::anneal_swap;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;
};

// One entry per snapshot, in series order. Failed steps carry their error
// and are skipped by the analytics below.
struct HorizonResult {
  int k = 0;
  std::vector<HorizonEntry> entries;

  int failed_count() const;
  std::vector<double> ndi_abs_series() const;   // ok entries only
  std::vector<double> ndi_gain_series() const;  // ok entries only
};

// Solves every snapshot independently. Per-step seeds are config.seed XOR
// the time step value, so results do not depend on processing order or the
// number of workers.
HorizonResult sweep_horizon(const NdiOracle& oracle, int k, const SolverConfig& config);

struct FrequencyTable {
  std::vector<long long> counts;  // per link: steps where selected
  std::vector<int> ranked;        // link ids, count descending then id ascending
  int snapshot_count = 0;
  int k = 0;

  long long total() const;
};

FrequencyTable link_frequency(const HorizonResult& horizon, int link_count);

struct TopLinkRow {
  int link = 0;
  long long frequency = 0;
  std::string from_node;
  std::string to_node;
  double lat_from = 0.0;
  double lon_from = 0.0;
  double lat_to = 0.0;
  double lon_to = 0.0;
};

std::vector<TopLinkRow> top_frequency_links(const FrequencyTable& table,
                                            const NetworkTopology& topology, int m);

// Flags the top (100-p)% of steps per percentile p. The cutoff is the m-th
// largest value with m = ceil((100-p)/100 * n); ties at the cutoff are all
// flagged and noted as degenerate. Runs are maximal stretches of at least
// two adjacent flagged steps; lone flags are listed as singletons.
struct RiskWindows {
  std::vector<double> percentiles;
  std::vector<double> thresholds;
  std::vector<std::vector<int>> flagged;                  // per percentile, series positions
  std::vector<std::vector<std::pair<int, int>>> runs;     // [first, last] positions
  std::vector<std::vector<int>> singletons;
  bool degenerate_ties = false;
};

RiskWindows risk_windows(std::span<const double> ndi,
                         std::span<const double> percentiles = {});

// First differences of a series; length must be at least 2.
std::vector<double> delta_series(std::span<const double> ndi);

struct KSweepCell {
  int time_step = 0;
  std::vector<int> critical;
  double ndi_abs = 0.0;
  double ndi_gain = 0.0;
  double solve_time_s = 0.0;
};

struct KSweepResult {
  std::vector<int> k_list;
  std::optional<int> fixed_step;
  std::vector<std::vector<KSweepCell>> per_k;  // [k index][step index]
  std::vector<bool> nested;  // per consecutive k pair: nested at every step
};

// Re-solves with each k in k_list, either across the whole horizon or at one
// fixed step. Coefficients are extracted once per step and shared across k.
KSweepResult k_sweep(const NdiOracle& oracle, std::span<const int> k_list,
                     std::optional<int> fixed_step, const SolverConfig& config);

struct TimingStats {
  double median = 0.0;
  double p95 = 0.0;
  double max = 0.0;
};

struct TimingReport {
  std::vector<std::pair<int, double>> per_step;  // time step, seconds
  double slope_s_per_step = 0.0;                 // least squares vs position
  TimingStats overall;
  std::vector<std::pair<int, TimingStats>> per_k;
};

TimingReport timing_report(const HorizonResult& horizon, const KSweepResult* ksweep = nullptr);

}  // namespace critlink
