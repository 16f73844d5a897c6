#include "bast/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bast/error.hpp"

namespace bast {

namespace {

std::string describe(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

double scale_of(const Point& p, const Point& q) {
  return std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y)});
}

}  // namespace

bool coincident(const Point& p, const Point& q) {
  return distance(p, q) <= kDistanceTolerance * scale_of(p, q);
}

void require_valid_points(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate at index " + std::to_string(i));
    }
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Point& p = points[order[k]];
    for (std::size_t m = k + 1; m < order.size(); ++m) {
      const Point& q = points[order[m]];
      if (q.x - p.x > kDistanceTolerance * scale_of(p, q)) break;
      if (coincident(p, q)) {
        const auto lo = std::min(order[k], order[m]);
        const auto hi = std::max(order[k], order[m]);
        throw Error(ErrorCode::kDuplicatePoint, "points " + std::to_string(lo) + " and " +
                                                    std::to_string(hi) + " coincide at " + describe(p));
      }
    }
  }
}

double normalize_degrees(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r = 0.0;
  return r;
}

double angle_difference(double a, double b) {
  double d = normalize_degrees(a - b);
  if (d > 180.0) d -= 360.0;
  return d;
}

bool same_direction(Direction a, Direction b, double tol) {
  return std::abs(angle_difference(a.degrees(), b.degrees())) <= tol;
}

bool AngleInterval::contains(Direction d, double tol) const {
  if (extent >= 360.0 - tol) return true;
  const double offset = normalize_degrees(d.degrees() - start.degrees());
  return offset <= extent + tol || offset >= 360.0 - tol;
}

bool covers_full_circle(std::span<const AngleInterval> arcs, double tol) {
  std::vector<std::pair<double, double>> segments;
  for (const auto& arc : arcs) {
    if (arc.extent >= 360.0 - tol) return true;
    const double s = arc.start.degrees();
    const double e = s + arc.extent;
    if (e <= 360.0) {
      segments.emplace_back(s, e);
    } else {
      segments.emplace_back(s, 360.0);
      segments.emplace_back(0.0, e - 360.0);
    }
  }
  std::sort(segments.begin(), segments.end());
  double reached = 0.0;
  for (const auto& [s, e] : segments) {
    if (s > reached + tol) return false;
    reached = std::max(reached, e);
  }
  return reached >= 360.0 - tol;
}

Wedge make_wedge(Point apex, Direction bisector, double aperture, std::optional<double> radius) {
  if (!(aperture > 0.0) || aperture > 360.0) {
    throw Error(ErrorCode::kInvalidArgument, "wedge aperture must lie in (0, 360]");
  }
  if (radius && !(*radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "wedge radius must be positive");
  }
  return Wedge{apex, bisector, aperture, radius};
}

Direction direction(const Point& p, const Point& q) {
  if (coincident(p, q)) {
    throw Error(ErrorCode::kDuplicatePoint, "direction undefined between coincident points " + describe(p));
  }
  return Direction(to_degrees(std::atan2(q.y - p.y, q.x - p.x)));
}

bool wedge_contains(const Wedge& w, const Point& q) {
  if (coincident(w.apex, q)) return true;
  if (w.radius) {
    if (distance(w.apex, q) > *w.radius + length_slack(*w.radius)) return false;
  }
  if (w.aperture >= 360.0) return true;
  return w.directions().contains(direction(w.apex, q));
}

double angular_spread(std::vector<double> directions_deg) {
  if (directions_deg.size() < 2) return 0.0;
  for (double& d : directions_deg) d = normalize_degrees(d);
  std::sort(directions_deg.begin(), directions_deg.end());
  double max_gap = directions_deg.front() + 360.0 - directions_deg.back();
  for (std::size_t i = 1; i < directions_deg.size(); ++i) {
    max_gap = std::max(max_gap, directions_deg[i] - directions_deg[i - 1]);
  }
  return 360.0 - max_gap;
}

double angular_spread(const Point& center, std::span<const Point> neighbors) {
  std::vector<double> dirs;
  dirs.reserve(neighbors.size());
  for (const auto& q : neighbors) dirs.push_back(direction(center, q).degrees());
  return angular_spread(std::move(dirs));
}

Wedge witness_wedge(const Point& center, std::span<const Point> neighbors, double aperture) {
  if (neighbors.empty()) return make_wedge(center, Direction(0.0), aperture);
  std::vector<double> dirs;
  dirs.reserve(neighbors.size());
  for (const auto& q : neighbors) dirs.push_back(direction(center, q).degrees());
  std::sort(dirs.begin(), dirs.end());
  // The spanning arc starts right after the largest gap.
  std::size_t after_gap = 0;
  double max_gap = dirs.front() + 360.0 - dirs.back();
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    const double gap = dirs[i] - dirs[i - 1];
    if (gap > max_gap) {
      max_gap = gap;
      after_gap = i;
    }
  }
  const double spread = 360.0 - max_gap;
  return make_wedge(center, Direction(dirs[after_gap] + spread / 2.0), aperture);
}

int sextant_of(Direction d) {
  const int idx = static_cast<int>(std::floor(d.degrees() / 60.0)) + 1;
  return std::clamp(idx, 1, 6);
}

FastWedgeTest::FastWedgeTest(const Wedge& w)
    : apex_(w.apex),
      right_(w.right_ray().unit()),
      left_(w.left_ray().unit()),
      reflex_(w.aperture > 180.0),
      full_(w.aperture >= 360.0 - kAngleTolerance),
      slack_(std::sin(to_radians(kAngleTolerance))) {}

bool FastWedgeTest::contains(const Point& q) const {
  if (full_) return true;
  const Point v = q - apex_;
  const double n = std::abs(v.x) + std::abs(v.y);
  if (n == 0.0) return true;
  const double eps = slack_ * n;
  const bool past_right = cross(right_, v) >= -eps;
  const bool before_left = cross(v, left_) >= -eps;
  return reflex_ ? (past_right || before_left) : (past_right && before_left);
}

std::vector<Point> disk_samples(Point center, double radius, int count) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt((i + 0.5) / count);
    const double t = i * golden;
    out.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return out;
}

double diameter(std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) best = std::max(best, distance(points[i], points[j]));
  }
  return best;
}

Point centroid(std::span<const Point> points) {
  Point c;
  if (points.empty()) return c;
  for (const auto& p : points) c = c + p;
  return c * (1.0 / static_cast<double>(points.size()));
}

Point rotate(const Point& v, double deg) {
  const double r = to_radians(deg);
  const double c = std::cos(r), s = std::sin(r);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace bast
