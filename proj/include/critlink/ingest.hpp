#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace critlink {

// One (link, time step) traffic record as it appears in the input table.
struct LinkObservation {
  std::string from_node;
  std::string to_node;
  double lat_from = 0.0;
  double lon_from = 0.0;
  double lat_to = 0.0;
  double lon_to = 0.0;
  double travel_time = 0.0;  // minutes
  double speed = 0.0;        // km/h
  int time_step = 0;
};

// Maps canonical field names to the column names used by a particular file.
struct ColumnMapping {
  std::string from_node = "from_node";
  std::string to_node = "to_node";
  std::string lat_from = "lat_from";
  std::string lon_from = "lon_from";
  std::string lat_to = "lat_to";
  std::string lon_to = "lon_to";
  std::string travel_time = "travel_time_min";
  std::string speed = "speed_kmh";
  std::string time_step = "time_step";
};

struct ParseResult {
  std::vector<LinkObservation> observations;
  long long rows_total = 0;
  long long rows_rejected = 0;
};

// Rows with non-positive travel time or speed, out-of-range coordinates, a
// negative time step, or unparsable numeric fields are rejected individually;
// more than 50% rejected rows is treated as a schema mismatch and is fatal.
ParseResult parse_observations(std::istream& in, const ColumnMapping& columns = {},
                               char delimiter = ',');
ParseResult parse_observations_file(const std::string& path, const ColumnMapping& columns = {},
                                    char delimiter = ',');

struct LinkGeometry {
  double lat_from = 0.0;
  double lon_from = 0.0;
  double lat_to = 0.0;
  double lon_to = 0.0;
};

// Directed graph with dense, stable link indices. Duplicate (from, to) pairs
// present in the observations collapse onto one link; self-loops are kept.
struct NetworkTopology {
  std::vector<std::string> nodes;             // node index -> identifier
  std::vector<std::pair<int, int>> links;     // link index -> (from, to) node indices
  std::vector<LinkGeometry> geometry;         // per link
  std::vector<double> length_km;              // per link, derived from the data
  std::map<std::string, int> node_index;
  std::map<std::pair<int, int>, int> link_index;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int link_count() const { return static_cast<int>(links.size()); }
  const std::string& from_id(int link) const { return nodes[links[link].first]; }
  const std::string& to_id(int link) const { return nodes[links[link].second]; }
  bool is_self_loop(int link) const { return links[link].first == links[link].second; }
  // -1 when the pair is unknown
  int find_link(const std::string& from, const std::string& to) const;
  void rebuild_indices();
};

NetworkTopology build_topology(const std::vector<LinkObservation>& observations);

struct LinkState {
  double travel_time = 0.0;  // minutes
  double speed = 0.0;        // km/h
};

enum class RepairPolicy { strict, forward_fill, link_median };

RepairPolicy parse_repair_policy(const std::string& name);
std::string to_string(RepairPolicy policy);

// Per-step snapshot of the whole network: values[step][link].
struct SnapshotSeries {
  std::vector<int> time_steps;  // sorted, distinct
  std::vector<std::vector<LinkState>> values;
  long long repaired_cells = 0;
  long long duplicate_rows = 0;

  int step_count() const { return static_cast<int>(time_steps.size()); }
  int link_count() const { return time_steps.empty() ? 0 : static_cast<int>(values[0].size()); }
  // position of a time step value in time_steps, or -1
  int step_index(int time_step) const;
  double travel_time(int step_pos, int link) const { return values[step_pos][link].travel_time; }
};

SnapshotSeries assemble_snapshots(const std::vector<LinkObservation>& observations,
                                  const NetworkTopology& topology,
                                  RepairPolicy policy = RepairPolicy::forward_fill);

struct ConnectivityReport {
  int component_count = 0;        // undirected projection
  int giant_component_size = 0;   // nodes in the largest component
  int isolated_nodes = 0;         // single-node components
  int strong_component_count = 0; // directed, reported as a diagnostic
};

ConnectivityReport connectivity_report(const NetworkTopology& topology);

struct SyntheticSpec {
  int node_count = 150;
  int link_count = 200;
  int step_count = 50;
  std::uint64_t seed = 1;
  int step_stride = 5;  // emitted time steps are 0, stride, 2*stride, ...
  // bounding box for node placement
  double lat_min = 25.2;
  double lat_max = 25.9;
  double lon_min = -80.5;
  double lon_max = -80.1;
};

struct SyntheticNetwork {
  NetworkTopology topology;
  SnapshotSeries series;
};

// Connected directed network with a diurnal-style travel-time profile per
// link. Deterministic for a given spec.
SyntheticNetwork generate_synthetic(const SyntheticSpec& spec);
SyntheticNetwork generate_synthetic(int node_count, int link_count, int step_count,
                                    std::uint64_t seed);

// Inverse of parse + assemble: emits the observation table for a series.
void write_observations(std::ostream& out, const NetworkTopology& topology,
                        const SnapshotSeries& series);

}  // namespace critlink
