#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "critlink/analysis.hpp"
#include "critlink/ingest.hpp"

namespace critlink {

// temp file + rename, so interrupted runs leave no truncated outputs
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Columnar artifacts produced by ingest and reloaded by the other commands.
void write_links_csv(std::ostream& out, const NetworkTopology& topology);
NetworkTopology read_links_csv(std::istream& in);
void write_snapshots_csv(std::ostream& out, const NetworkTopology& topology,
                         const SnapshotSeries& series);
SnapshotSeries read_snapshots_csv(std::istream& in, const NetworkTopology& topology);

struct GeoFeature {
  int link = 0;
  double value = 0.0;
};

// FeatureCollection with one LineString per link (Point for self-loops).
// value_key names the property carrying each feature's value, e.g.
// "frequency" or "coefficient".
std::string export_geojson(const NetworkTopology& topology, std::span<const GeoFeature> features,
                           const std::string& value_key, const std::string& meta_comment);

// Minimal SVG polyline chart for quick inspection of a series.
std::string svg_line_chart(std::span<const double> values, const std::string& title);

}  // namespace critlink
