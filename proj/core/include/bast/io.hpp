#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bast/generate.hpp"
#include "bast/geom.hpp"
#include "bast/graph.hpp"

namespace bast {

enum class InstanceFormat { kAuto, kJson, kCsv };
enum class DuplicatePolicy { kReject, kDeduplicate };

struct Instance {
  PointSet points;
  std::optional<std::string> generator;
  std::optional<std::uint64_t> seed;
  std::map<std::string, double> meta;
};

Instance to_instance(const GeneratedInstance& g);

/// JSON {"points": [[x,y],...], "meta": {...}} or headerless "x,y" CSV.
/// kAuto picks JSON when the first non-blank character is '{'. Throws
/// ParseError (with line or byte position) and DuplicatePoint.
Instance parse_instance(std::string_view text, InstanceFormat format = InstanceFormat::kAuto,
                        DuplicatePolicy duplicates = DuplicatePolicy::kReject);
/// Coordinates are written with round-trip precision.
std::string emit_instance(const Instance& instance, InstanceFormat format = InstanceFormat::kJson);

struct WedgeRecord {
  double bisector_deg = 0.0;
  double aperture_deg = 0.0;
  std::optional<double> radius;
  friend bool operator==(const WedgeRecord&, const WedgeRecord&) = default;
};

struct ResultSummary {
  std::optional<double> alpha;
  double weight = 0.0;
  std::optional<double> mst_weight;
  std::optional<double> ratio;
  std::optional<double> max_spread_deg;
  std::optional<int> hop_stretch;
  std::optional<double> max_edge_len;
  friend bool operator==(const ResultSummary&, const ResultSummary&) = default;
};

struct ResultFile {
  std::string kind;  // "alpha-st", "spanner" or "oracle"
  bool pass = false;
  ResultSummary summary;
  std::map<std::string, bool> checks;
  std::map<std::string, double> stats;
  std::vector<WedgeRecord> wedges;
  std::vector<Edge> edges;
  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

std::vector<WedgeRecord> to_records(std::span<const Wedge> wedges);
/// Throws ApexMismatch when counts differ.
std::vector<Wedge> from_records(std::span<const Point> points, std::span<const WedgeRecord> records);

/// Deterministic JSON; numbers rounded to 12 significant digits.
std::string emit_result(const ResultFile& result);
/// Throws ParseError.
ResultFile parse_result(std::string_view text);
/// emit_result(parse_result(text)).
std::string canonicalize_result(std::string_view text);

/// Rounds to 12 significant digits.
double round12(double v);

struct SvgOptions {
  int size = 800;
  double margin = 0.05;               // fraction of the canvas
  std::optional<double> wedge_radius;  // default: 15% of the point extent
  bool draw_wedges = true;
};

/// SVG 1.1 with wedge sectors, edges and points, in that paint order.
std::string emit_svg(std::span<const Point> points, std::span<const Wedge> wedges, std::span<const Edge> edges,
                     const SvgOptions& options = {});

}  // namespace bast
