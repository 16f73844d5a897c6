#include "bast/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "bast/error.hpp"

namespace bast {

using nlohmann::ordered_json;

Instance to_instance(const GeneratedInstance& g) {
  Instance out;
  out.points = g.points;
  out.generator = g.generator;
  out.seed = g.seed;
  out.meta = g.meta;
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

double parse_number(std::string_view field, const std::string& where) {
  std::size_t a = 0, b = field.size();
  while (a < b && std::isspace(static_cast<unsigned char>(field[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(field[b - 1]))) --b;
  const std::string s(field.substr(a, b - a));
  if (s.empty()) parse_fail(where, "empty field");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) parse_fail(where, "'" + s + "' is not a number");
  return v;
}

PointSet parse_csv(std::string_view text) {
  PointSet out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      parse_fail(where, "expected two comma-separated columns");
    }
    out.push_back({parse_number(line.substr(0, comma), where), parse_number(line.substr(comma + 1), where)});
  }
  return out;
}

Instance parse_json_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    parse_fail("document", "expected an object with a \"points\" array");
  }
  Instance out;
  const auto& pts = doc["points"];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      parse_fail("points[" + std::to_string(k) + "]", "expected [x, y]");
    }
    out.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  if (doc.contains("meta")) {
    const auto& meta = doc["meta"];
    if (!meta.is_object()) parse_fail("meta", "expected an object");
    for (const auto& [key, value] : meta.items()) {
      if (key == "generator" && value.is_string()) {
        out.generator = value.get<std::string>();
      } else if (key == "seed" && value.is_number_integer()) {
        out.seed = value.get<std::uint64_t>();
      } else if (value.is_number()) {
        out.meta[key] = value.get<double>();
      } else {
        parse_fail("meta." + key, "expected a number");
      }
    }
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text, InstanceFormat format, DuplicatePolicy duplicates) {
  if (format == InstanceFormat::kAuto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? InstanceFormat::kJson : InstanceFormat::kCsv;
  }
  Instance out;
  if (format == InstanceFormat::kJson) {
    out = parse_json_instance(text);
  } else {
    out.points = parse_csv(text);
  }
  if (duplicates == DuplicatePolicy::kDeduplicate) {
    PointSet kept;
    for (const auto& p : out.points) {
      if (std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(p);
    }
    out.points = std::move(kept);
  }
  require_valid_points(out.points);
  return out;
}

std::string emit_instance(const Instance& instance, InstanceFormat format) {
  if (format == InstanceFormat::kCsv) {
    std::string out;
    char buf[64];
    for (const auto& p : instance.points) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
      out += buf;
    }
    return out;
  }
  ordered_json doc;
  doc["points"] = ordered_json::array();
  for (const auto& p : instance.points) doc["points"].push_back({p.x, p.y});
  if (instance.generator || instance.seed || !instance.meta.empty()) {
    ordered_json meta = ordered_json::object();
    if (instance.generator) meta["generator"] = *instance.generator;
    if (instance.seed) meta["seed"] = *instance.seed;
    for (const auto& [k, v] : instance.meta) meta[k] = v;
    doc["meta"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

std::vector<WedgeRecord> to_records(std::span<const Wedge> wedges) {
  std::vector<WedgeRecord> out;
  for (const auto& w : wedges) out.push_back({w.bisector.degrees(), w.aperture, w.radius});
  return out;
}

std::vector<Wedge> from_records(std::span<const Point> points, std::span<const WedgeRecord> records) {
  if (points.size() != records.size()) {
    throw Error(ErrorCode::kApexMismatch, std::to_string(records.size()) + " wedge records for " +
                                              std::to_string(points.size()) + " points");
  }
  std::vector<Wedge> out;
  for (std::size_t k = 0; k < points.size(); ++k) {
    out.push_back(make_wedge(points[k], Direction(records[k].bisector_deg), records[k].aperture_deg,
                             records[k].radius));
  }
  return out;
}

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

void put(ordered_json& obj, const char* key, const std::optional<double>& v) {
  if (v) obj[key] = round12(*v);
}

std::optional<double> get_opt(const ordered_json& obj, const char* key) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_number()) parse_fail(std::string("summary.") + key, "expected a number");
  return obj[key].get<double>();
}

}  // namespace

std::string emit_result(const ResultFile& r) {
  ordered_json doc;
  doc["kind"] = r.kind;
  doc["pass"] = r.pass;
  ordered_json summary = ordered_json::object();
  put(summary, "alpha", r.summary.alpha);
  summary["weight"] = round12(r.summary.weight);
  put(summary, "mst_weight", r.summary.mst_weight);
  put(summary, "ratio", r.summary.ratio);
  put(summary, "max_spread_deg", r.summary.max_spread_deg);
  if (r.summary.hop_stretch) summary["hop_stretch"] = *r.summary.hop_stretch;
  put(summary, "max_edge_len", r.summary.max_edge_len);
  doc["summary"] = std::move(summary);
  doc["checks"] = ordered_json::object();
  for (const auto& [k, v] : r.checks) doc["checks"][k] = v;
  doc["stats"] = ordered_json::object();
  for (const auto& [k, v] : r.stats) doc["stats"][k] = round12(v);
  doc["wedges"] = ordered_json::array();
  for (const auto& w : r.wedges) {
    ordered_json rec;
    rec["bisector_deg"] = round12(w.bisector_deg);
    rec["aperture_deg"] = round12(w.aperture_deg);
    if (w.radius) rec["radius"] = round12(*w.radius);
    doc["wedges"].push_back(std::move(rec));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : r.edges) doc["edges"].push_back({e.u, e.v});
  return doc.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  ResultFile r;
  try {
    r.kind = doc.at("kind").get<std::string>();
    r.pass = doc.at("pass").get<bool>();
    const auto& s = doc.at("summary");
    r.summary.alpha = get_opt(s, "alpha");
    r.summary.weight = s.at("weight").get<double>();
    r.summary.mst_weight = get_opt(s, "mst_weight");
    r.summary.ratio = get_opt(s, "ratio");
    r.summary.max_spread_deg = get_opt(s, "max_spread_deg");
    if (s.contains("hop_stretch")) r.summary.hop_stretch = s["hop_stretch"].get<int>();
    r.summary.max_edge_len = get_opt(s, "max_edge_len");
    if (doc.contains("checks")) {
      for (const auto& [k, v] : doc["checks"].items()) r.checks[k] = v.get<bool>();
    }
    if (doc.contains("stats")) {
      for (const auto& [k, v] : doc["stats"].items()) r.stats[k] = v.get<double>();
    }
    for (const auto& w : doc.at("wedges")) {
      WedgeRecord rec{w.at("bisector_deg").get<double>(), w.at("aperture_deg").get<double>(), std::nullopt};
      if (w.contains("radius")) rec.radius = w["radius"].get<double>();
      r.wedges.push_back(rec);
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) parse_fail("edges", "expected [u, v] pairs");
      r.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  } catch (const ordered_json::exception& e) {
    parse_fail("result", e.what());
  }
  return r;
}

std::string canonicalize_result(std::string_view text) { return emit_result(parse_result(text)); }

namespace {

struct Canvas {
  double scale = 1.0;
  double ox = 0.0, oy = 0.0;
  int size = 800;
  double margin_px = 40.0;

  double x(double wx) const { return margin_px + (wx - ox) * scale; }
  double y(double wy) const { return size - margin_px - (wy - oy) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string emit_svg(std::span<const Point> points, std::span<const Wedge> wedges, std::span<const Edge> edges,
                     const SvgOptions& options) {
  Canvas cv;
  cv.size = options.size;
  cv.margin_px = options.margin * options.size;
  double minx = 0, maxx = 1, miny = 0, maxy = 1;
  if (!points.empty()) {
    minx = maxx = points[0].x;
    miny = maxy = points[0].y;
    for (const auto& p : points) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double extent = std::max({maxx - minx, maxy - miny, 1e-9});
  cv.scale = (cv.size - 2.0 * cv.margin_px) / extent;
  // Centre the shorter axis.
  cv.ox = minx - (extent - (maxx - minx)) / 2.0;
  cv.oy = miny - (extent - (maxy - miny)) / 2.0;
  const double default_radius = options.wedge_radius.value_or(0.15 * extent);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.size << "\" height=\"" << cv.size
      << "\" viewBox=\"0 0 " << cv.size << ' ' << cv.size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (options.draw_wedges && !wedges.empty()) {
    out << "<g fill=\"#4a90d9\" fill-opacity=\"0.12\" stroke=\"#4a90d9\" stroke-opacity=\"0.5\" stroke-width=\"0.5\">\n";
    for (const auto& w : wedges) {
      const double r = w.radius.value_or(default_radius) * cv.scale;
      const double ax = cv.x(w.apex.x), ay = cv.y(w.apex.y);
      if (w.aperture >= 360.0 - kAngleTolerance) {
        out << "<circle cx=\"" << fmt(ax) << "\" cy=\"" << fmt(ay) << "\" r=\"" << fmt(r) << "\"/>\n";
        continue;
      }
      const Point a = w.right_ray().unit();
      const Point b = w.left_ray().unit();
      // Screen y points down, so counter-clockwise in the plane is sweep-flag 0.
      out << "<path d=\"M " << fmt(ax) << ' ' << fmt(ay) << " L " << fmt(ax + r * a.x) << ' ' << fmt(ay - r * a.y)
          << " A " << fmt(r) << ' ' << fmt(r) << " 0 " << (w.aperture > 180.0 ? 1 : 0) << " 0 " << fmt(ax + r * b.x)
          << ' ' << fmt(ay - r * b.y) << " Z\"/>\n";
    }
    out << "</g>\n";
  }
  if (!edges.empty()) {
    out << "<g stroke=\"#222222\" stroke-width=\"1.5\">\n";
    for (const auto& e : edges) {
      out << "<line x1=\"" << fmt(cv.x(points[e.u].x)) << "\" y1=\"" << fmt(cv.y(points[e.u].y)) << "\" x2=\""
          << fmt(cv.x(points[e.v].x)) << "\" y2=\"" << fmt(cv.y(points[e.v].y)) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g fill=\"#d0021b\">\n";
  for (const auto& p : points) {
    out << "<circle cx=\"" << fmt(cv.x(p.x)) << "\" cy=\"" << fmt(cv.y(p.y)) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace bast
