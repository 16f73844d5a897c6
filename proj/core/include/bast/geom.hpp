#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace bast {

/// Angular slack for containment tests, in degrees.
inline constexpr double kAngleTolerance = 1e-9;
/// Relative slack for distance comparisons (radius, duplicates, unit distance).
inline constexpr double kDistanceTolerance = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
};

using PointSet = std::vector<Point>;

inline double distance(const Point& p, const Point& q) { return std::hypot(q.x - p.x, q.y - p.y); }
inline double cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline double dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

inline double to_radians(double deg) { return deg * (std::numbers::pi / 180.0); }
inline double to_degrees(double rad) { return rad * (180.0 / std::numbers::pi); }

/// Scale-aware slack for comparing lengths near `reference`.
inline double length_slack(double reference) { return kDistanceTolerance * std::max(1.0, reference); }

/// True when p and q are closer than the duplicate tolerance.
bool coincident(const Point& p, const Point& q);

/// Throws DuplicatePoint if some pair in `points` coincides, or
/// InvalidArgument if a coordinate is not finite.
void require_valid_points(std::span<const Point> points);

/// Normalizes an angle in degrees into [0, 360).
double normalize_degrees(double deg);

/// Signed smallest difference a - b, in (-180, 180].
double angle_difference(double a, double b);

/// An orientation, stored in degrees, CCW from the +x axis.
class Direction {
 public:
  Direction() = default;
  explicit Direction(double degrees) : degrees_(normalize_degrees(degrees)) {}

  double degrees() const { return degrees_; }
  double radians() const { return to_radians(degrees_); }
  Point unit() const { return {std::cos(radians()), std::sin(radians())}; }

  Direction operator+(double deg) const { return Direction(degrees_ + deg); }
  Direction operator-(double deg) const { return Direction(degrees_ - deg); }
  Direction reversed() const { return Direction(degrees_ + 180.0); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  double degrees_ = 0.0;
};

/// True if a and b agree modulo 360 within `tol` degrees.
bool same_direction(Direction a, Direction b, double tol = kAngleTolerance);

/// CCW arc starting at `start` and spanning `extent` degrees, extent in (0, 360].
struct AngleInterval {
  Direction start;
  double extent = 0.0;

  Direction end() const { return start + extent; }
  bool contains(Direction d, double tol = kAngleTolerance) const;
};

/// True iff the union of the arcs covers every direction (gaps up to `tol`
/// degrees are treated as closed).
bool covers_full_circle(std::span<const AngleInterval> arcs, double tol = kAngleTolerance);

/// Closed circular sector modeling a directional antenna.
struct Wedge {
  Point apex;
  Direction bisector;
  double aperture = 0.0;  // degrees, in (0, 360]
  std::optional<double> radius;

  Direction left_ray() const { return bisector + aperture / 2.0; }
  Direction right_ray() const { return bisector - aperture / 2.0; }
  Direction reverse_ray() const { return bisector.reversed(); }
  AngleInterval directions() const { return {right_ray(), aperture}; }
};

/// Builds a wedge, rejecting non-positive aperture/radius.
Wedge make_wedge(Point apex, Direction bisector, double aperture, std::optional<double> radius = std::nullopt);

/// Direction of the vector q - p. Throws DuplicatePoint if p and q coincide.
Direction direction(const Point& p, const Point& q);

/// Closed membership test: angular interval with kAngleTolerance slack and,
/// when a radius is present, |apex q| <= radius with relative slack.
bool wedge_contains(const Wedge& w, const Point& q);

/// Smallest angle at `center` containing every ray toward `neighbors`:
/// 360 minus the largest circular gap between sorted directions.
double angular_spread(const Point& center, std::span<const Point> neighbors);

/// Angular spread of a set of directions (degrees); 0 for fewer than two.
double angular_spread(std::vector<double> directions_deg);

/// Witness wedge of the given aperture whose bisector sits at the circular
/// midpoint of the arc spanned by the neighbors. With no neighbors the
/// bisector is 0.
Wedge witness_wedge(const Point& center, std::span<const Point> neighbors, double aperture);

/// Sextant index in 1..6, [(i-1)*60, i*60).
int sextant_of(Direction d);

/// Containment with rays precomputed as vectors; used by the dense samplers
/// where an atan2 per test is too slow. Agrees with wedge_contains except
/// within ~kAngleTolerance of a bounding ray. Ignores the radius.
class FastWedgeTest {
 public:
  explicit FastWedgeTest(const Wedge& w);
  bool contains(const Point& q) const;

 private:
  Point apex_;
  Point right_;
  Point left_;
  bool reflex_ = false;
  bool full_ = false;
  double slack_ = 0.0;
};

/// Deterministic low-discrepancy samples (Vogel spiral) in a disk.
std::vector<Point> disk_samples(Point center, double radius, int count);

/// Largest pairwise distance (0 for fewer than two points).
double diameter(std::span<const Point> points);

Point centroid(std::span<const Point> points);

/// Rotates v CCW by `deg` degrees about the origin.
Point rotate(const Point& v, double deg);

}  // namespace bast
