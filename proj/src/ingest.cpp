#include "critlink/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "critlink/errors.hpp"
#include "critlink/rng.hpp"
#include "critlink/text.hpp"

namespace critlink {

namespace {

double median(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  const double deg = 0.017453292519943295;  // pi / 180
  const double dlat = (lat2 - lat1) * deg;
  const double dlon = (lon2 - lon1) * deg;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * deg) * std::cos(lat2 * deg) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * 6371.0 * std::asin(std::min(1.0, std::sqrt(a)));
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// Iterative Tarjan SCC; returns the number of strongly connected components.
int count_strong_components(const NetworkTopology& topo) {
  const int n = topo.node_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [from, to] : topo.links) {
    if (from != to) adj[from].push_back(to);
  }
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  int components = 0;

  struct Frame {
    int node;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    call.push_back({start, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (child < adj[v].size()) {
        int w = adj[v][child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        ++components;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          if (w == v) break;
        }
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[finished]);
      }
    }
  }
  return components;
}

}  // namespace

int NetworkTopology::find_link(const std::string& from, const std::string& to) const {
  auto fi = node_index.find(from);
  auto ti = node_index.find(to);
  if (fi == node_index.end() || ti == node_index.end()) return -1;
  auto li = link_index.find({fi->second, ti->second});
  return li == link_index.end() ? -1 : li->second;
}

void NetworkTopology::rebuild_indices() {
  node_index.clear();
  link_index.clear();
  for (int i = 0; i < node_count(); ++i) node_index[nodes[i]] = i;
  for (int s = 0; s < link_count(); ++s) link_index[links[s]] = s;
}

int SnapshotSeries::step_index(int time_step) const {
  auto it = std::lower_bound(time_steps.begin(), time_steps.end(), time_step);
  if (it == time_steps.end() || *it != time_step) return -1;
  return static_cast<int>(it - time_steps.begin());
}

RepairPolicy parse_repair_policy(const std::string& name) {
  if (name == "strict") return RepairPolicy::strict;
  if (name == "forward-fill") return RepairPolicy::forward_fill;
  if (name == "link-median") return RepairPolicy::link_median;
  throw ValidationError("unknown repair policy '" + name +
                        "' (expected strict, forward-fill, or link-median)");
}

std::string to_string(RepairPolicy policy) {
  switch (policy) {
    case RepairPolicy::strict: return "strict";
    case RepairPolicy::forward_fill: return "forward-fill";
    case RepairPolicy::link_median: return "link-median";
  }
  return "forward-fill";
}

ParseResult parse_observations(std::istream& in, const ColumnMapping& columns, char delimiter) {
  std::string line;
  // comment lines may precede the header (our own writers stamp metadata)
  do {
    if (!std::getline(in, line)) {
      throw ValidationError("observation input is empty (no header row)");
    }
  } while (!line.empty() && line[0] == '#');

  const auto header = split_fields(line, delimiter);
  auto column_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (trim(header[i]) == name) return static_cast<int>(i);
    }
    throw ValidationError("missing column '" + name + "' in header");
  };

  const int c_from = column_of(columns.from_node);
  const int c_to = column_of(columns.to_node);
  const int c_lat_from = column_of(columns.lat_from);
  const int c_lon_from = column_of(columns.lon_from);
  const int c_lat_to = column_of(columns.lat_to);
  const int c_lon_to = column_of(columns.lon_to);
  const int c_time = column_of(columns.travel_time);
  const int c_speed = column_of(columns.speed);
  const int c_step = column_of(columns.time_step);
  const int needed = std::max({c_from, c_to, c_lat_from, c_lon_from, c_lat_to, c_lon_to, c_time,
                               c_speed, c_step});

  ParseResult result;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    ++result.rows_total;
    const auto fields = split_fields(line, delimiter);
    if (static_cast<int>(fields.size()) <= needed) {
      ++result.rows_rejected;
      continue;
    }
    LinkObservation obs;
    obs.from_node = trim(fields[c_from]);
    obs.to_node = trim(fields[c_to]);
    long long step = 0;
    bool ok = !obs.from_node.empty() && !obs.to_node.empty() &&
              parse_double(fields[c_lat_from], obs.lat_from) &&
              parse_double(fields[c_lon_from], obs.lon_from) &&
              parse_double(fields[c_lat_to], obs.lat_to) &&
              parse_double(fields[c_lon_to], obs.lon_to) &&
              parse_double(fields[c_time], obs.travel_time) &&
              parse_double(fields[c_speed], obs.speed) && parse_int(fields[c_step], step);
    ok = ok && obs.travel_time > 0.0 && obs.speed > 0.0;
    ok = ok && obs.lat_from >= -90.0 && obs.lat_from <= 90.0 && obs.lat_to >= -90.0 &&
         obs.lat_to <= 90.0;
    ok = ok && obs.lon_from >= -180.0 && obs.lon_from <= 180.0 && obs.lon_to >= -180.0 &&
         obs.lon_to <= 180.0;
    ok = ok && step >= 0 && step <= 0x7fffffffLL;
    if (!ok) {
      ++result.rows_rejected;
      continue;
    }
    obs.time_step = static_cast<int>(step);
    result.observations.push_back(std::move(obs));
  }

  if (result.rows_total > 0 && result.rows_rejected * 2 > result.rows_total) {
    std::ostringstream msg;
    msg << result.rows_rejected << " of " << result.rows_total
        << " rows rejected; this looks like a schema mismatch, check the column mapping";
    throw ValidationError(msg.str());
  }
  return result;
}

ParseResult parse_observations_file(const std::string& path, const ColumnMapping& columns,
                                    char delimiter) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open observation file '" + path + "'");
  return parse_observations(in, columns, delimiter);
}

NetworkTopology build_topology(const std::vector<LinkObservation>& observations) {
  if (observations.empty()) {
    throw ValidationError("cannot build a topology from an empty observation set");
  }
  NetworkTopology topo;
  std::vector<std::vector<double>> km_samples;

  auto node_of = [&](const std::string& id) {
    auto [it, inserted] = topo.node_index.try_emplace(id, topo.node_count());
    if (inserted) topo.nodes.push_back(id);
    return it->second;
  };

  for (const auto& obs : observations) {
    const int from = node_of(obs.from_node);
    const int to = node_of(obs.to_node);
    auto [it, inserted] = topo.link_index.try_emplace({from, to}, topo.link_count());
    if (inserted) {
      topo.links.emplace_back(from, to);
      topo.geometry.push_back({});
      km_samples.emplace_back();
    }
    const int s = it->second;
    // last occurrence wins, matching the duplicate-row rule
    topo.geometry[s] = {obs.lat_from, obs.lon_from, obs.lat_to, obs.lon_to};
    km_samples[s].push_back(obs.speed * obs.travel_time / 60.0);
  }

  topo.length_km.resize(topo.link_count());
  for (int s = 0; s < topo.link_count(); ++s) {
    topo.length_km[s] = median(km_samples[s]);
  }
  return topo;
}

SnapshotSeries assemble_snapshots(const std::vector<LinkObservation>& observations,
                                  const NetworkTopology& topology, RepairPolicy policy) {
  if (observations.empty()) {
    throw ValidationError("cannot assemble snapshots from an empty observation set");
  }
  std::set<int> distinct;
  for (const auto& obs : observations) distinct.insert(obs.time_step);

  SnapshotSeries series;
  series.time_steps.assign(distinct.begin(), distinct.end());
  const int steps = series.step_count();
  const int link_count = topology.link_count();
  series.values.assign(steps, std::vector<LinkState>(link_count));
  std::vector<std::vector<std::uint8_t>> filled(steps,
                                                std::vector<std::uint8_t>(link_count, 0));

  for (const auto& obs : observations) {
    const int s = topology.find_link(obs.from_node, obs.to_node);
    if (s < 0) {
      throw ValidationError("observation references link " + obs.from_node + "->" + obs.to_node +
                            " that is not in the topology");
    }
    const int ti = series.step_index(obs.time_step);
    if (filled[ti][s]) {
      ++series.duplicate_rows;
    } else {
      filled[ti][s] = 1;
    }
    series.values[ti][s] = {obs.travel_time, obs.speed};  // keep the last occurrence
  }

  for (int s = 0; s < link_count; ++s) {
    int missing = 0;
    for (int ti = 0; ti < steps; ++ti) missing += filled[ti][s] ? 0 : 1;
    if (missing == 0) continue;

    const std::string link_name = topology.from_id(s) + "->" + topology.to_id(s);
    if (missing == steps) {
      throw ValidationError("link " + link_name + " has no observations at any time step");
    }
    if (policy == RepairPolicy::strict) {
      std::ostringstream msg;
      msg << "link " << link_name << " is missing at " << missing << " of " << steps
          << " time steps (strict repair policy)";
      throw ValidationError(msg.str());
    }

    if (policy == RepairPolicy::forward_fill) {
      int first = 0;
      while (!filled[first][s]) ++first;
      for (int ti = first - 1; ti >= 0; --ti) {  // leading gap: backfill from first value
        series.values[ti][s] = series.values[first][s];
        ++series.repaired_cells;
      }
      for (int ti = first + 1; ti < steps; ++ti) {
        if (!filled[ti][s]) {
          series.values[ti][s] = series.values[ti - 1][s];
          ++series.repaired_cells;
        }
      }
    } else {  // link_median
      std::vector<double> times, speeds;
      for (int ti = 0; ti < steps; ++ti) {
        if (filled[ti][s]) {
          times.push_back(series.values[ti][s].travel_time);
          speeds.push_back(series.values[ti][s].speed);
        }
      }
      const LinkState fill{median(times), median(speeds)};
      for (int ti = 0; ti < steps; ++ti) {
        if (!filled[ti][s]) {
          series.values[ti][s] = fill;
          ++series.repaired_cells;
        }
      }
    }
  }
  return series;
}

ConnectivityReport connectivity_report(const NetworkTopology& topology) {
  const int n = topology.node_count();
  if (n == 0) throw ValidationError("connectivity report requires a non-empty topology");

  Dsu dsu(n);
  for (const auto& [from, to] : topology.links) dsu.unite(from, to);

  std::map<int, int> sizes;
  for (int v = 0; v < n; ++v) ++sizes[dsu.find(v)];

  ConnectivityReport report;
  report.component_count = static_cast<int>(sizes.size());
  for (const auto& [root, size] : sizes) {
    report.giant_component_size = std::max(report.giant_component_size, size);
    if (size == 1) ++report.isolated_nodes;
  }
  report.strong_component_count = count_strong_components(topology);
  return report;
}

SyntheticNetwork generate_synthetic(const SyntheticSpec& spec) {
  if (spec.node_count < 2) throw ValidationError("synthetic network needs at least 2 nodes");
  if (spec.step_count < 1) throw ValidationError("synthetic network needs at least 1 time step");
  if (spec.link_count < spec.node_count - 1) {
    throw ValidationError("link_count must be at least node_count - 1 to allow connectivity");
  }
  const long long max_links =
      static_cast<long long>(spec.node_count) * (spec.node_count - 1);
  if (spec.link_count > max_links) {
    throw ValidationError("link_count exceeds the number of distinct directed node pairs");
  }

  Rng rng(spec.seed);
  SyntheticNetwork net;
  auto& topo = net.topology;

  topo.nodes.reserve(spec.node_count);
  std::vector<double> lat(spec.node_count), lon(spec.node_count);
  for (int i = 0; i < spec.node_count; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "n%06d", i);
    topo.nodes.emplace_back(buf);
    lat[i] = rng.uniform(spec.lat_min, spec.lat_max);
    lon[i] = rng.uniform(spec.lon_min, spec.lon_max);
  }
  topo.rebuild_indices();

  auto add_link = [&](int from, int to) {
    auto [it, inserted] = topo.link_index.try_emplace({from, to}, topo.link_count());
    if (!inserted) return false;
    topo.links.emplace_back(from, to);
    topo.geometry.push_back({lat[from], lon[from], lat[to], lon[to]});
    return true;
  };

  // random tree first, so every seed yields one connected component
  for (int i = 1; i < spec.node_count; ++i) {
    const int j = rng.uniform_int(i);
    if (rng.uniform() < 0.5) {
      add_link(j, i);
    } else {
      add_link(i, j);
    }
  }
  while (topo.link_count() < spec.link_count) {
    const int a = rng.uniform_int(spec.node_count);
    const int b = rng.uniform_int(spec.node_count);
    if (a == b) continue;
    add_link(a, b);
  }

  const int link_count = topo.link_count();
  topo.length_km.resize(link_count);
  std::vector<double> v_free(link_count), base_minutes(link_count), amplitude(link_count),
      phase(link_count);
  for (int s = 0; s < link_count; ++s) {
    const auto& g = topo.geometry[s];
    const double crow = haversine_km(g.lat_from, g.lon_from, g.lat_to, g.lon_to);
    topo.length_km[s] = std::max(0.05, crow * rng.uniform(1.05, 1.35));
    v_free[s] = rng.uniform(40.0, 110.0);
    base_minutes[s] = topo.length_km[s] / v_free[s] * 60.0;
    amplitude[s] = rng.uniform(0.15, 1.2);
    phase[s] = rng.uniform(0.0, 6.283185307179586);
  }

  auto& series = net.series;
  series.time_steps.resize(spec.step_count);
  for (int i = 0; i < spec.step_count; ++i) series.time_steps[i] = i * spec.step_stride;
  series.values.assign(spec.step_count, std::vector<LinkState>(link_count));

  for (int ti = 0; ti < spec.step_count; ++ti) {
    const double pos = spec.step_count > 1
                           ? static_cast<double>(ti) / static_cast<double>(spec.step_count - 1)
                           : 0.0;
    for (int s = 0; s < link_count; ++s) {
      const double wave = 0.5 * (1.0 + std::sin(6.283185307179586 * pos + phase[s]));
      double factor = 1.0 + amplitude[s] * wave + rng.normal(0.0, 0.02 * amplitude[s]);
      factor = std::max(factor, 1.0005);
      const double travel_time = base_minutes[s] * factor;
      // reported speed wobbles a little around the length-consistent value
      double speed = topo.length_km[s] / travel_time * 60.0 * rng.uniform(0.97, 1.03);
      speed = std::min(std::max(speed, 1.0), 160.0);
      series.values[ti][s] = {travel_time, speed};
    }
  }
  return net;
}

SyntheticNetwork generate_synthetic(int node_count, int link_count, int step_count,
                                    std::uint64_t seed) {
  SyntheticSpec spec;
  spec.node_count = node_count;
  spec.link_count = link_count;
  spec.step_count = step_count;
  spec.seed = seed;
  return generate_synthetic(spec);
}

void write_observations(std::ostream& out, const NetworkTopology& topology,
                        const SnapshotSeries& series) {
  out << "from_node,to_node,lat_from,lon_from,lat_to,lon_to,travel_time_min,speed_kmh,time_step\n";
  for (int ti = 0; ti < series.step_count(); ++ti) {
    for (int s = 0; s < topology.link_count(); ++s) {
      const auto& g = topology.geometry[s];
      const auto& v = series.values[ti][s];
      out << topology.from_id(s) << ',' << topology.to_id(s) << ',' << format_double(g.lat_from)
          << ',' << format_double(g.lon_from) << ',' << format_double(g.lat_to) << ','
          << format_double(g.lon_to) << ',' << format_double(v.travel_time) << ','
          << format_double(v.speed) << ',' << series.time_steps[ti] << '\n';
    }
  }
}

}  // namespace critlink
