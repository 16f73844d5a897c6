#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "bast/geom.hpp"

namespace bast {

/// Rigid motion taking an input triplet to its canonical frame:
/// translate by -translation, rotate by -rotation_deg, then mirror across
/// the x axis when `reflected`.
struct RigidMotion {
  double rotation_deg = 0.0;
  Point translation;
  bool reflected = false;

  Point to_canonical(const Point& p) const;
  Point from_canonical(const Point& p) const;
  /// Maps a canonical-frame bisector back to the input frame.
  Direction bisector_from_canonical(double canonical_deg) const;
};

/// The 120-degree triplet gadget. Roles are input indices; `wedges` is
/// indexed by input index, expressed in the input frame.
struct TripletOrientation {
  std::size_t a = 0;  // largest triangle angle, canonical bisector 240
  std::size_t b = 0;  // smallest angle, canonical bisector 0
  std::size_t c = 0;  // canonical bisector 120
  RigidMotion transform;
  std::array<Wedge, 3> wedges;
};

struct QuadrupletOrientation {
  std::array<Wedge, 4> wedges;  // aperture 90, indexed by input index
  double frame_deg = 0.0;       // bisectors are frame + 45 + 90k
  bool verified = false;
};

inline constexpr double kTripletAperture = 120.0;
inline constexpr double kQuadrupletAperture = 90.0;
inline constexpr int kCoverageSamples = 10000;

/// Interior angles (degrees) of the triangle at each vertex. Collinear
/// inputs yield {0, 0, 180} in some order.
std::array<double, 3> triangle_angles(const std::array<Point, 3>& s);

/// Orients three 120-degree wedges so that the induced graph contains the
/// edges (a,b), (b,c) and the wedges cover the plane. Both postconditions
/// are checked; InvariantViolation is raised if either fails.
TripletOrientation orient_triplet(const std::array<Point, 3>& s);

/// Two wedges facing each other along the segment pq.
std::array<Wedge, 2> orient_pair(const Point& p, const Point& q, double aperture);

/// Orients four 90-degree wedges with connected induced graph and plane
/// coverage by searching quadrant frames and role assignments.
QuadrupletOrientation orient_quadruplet(const std::array<Point, 4>& s);

/// Exact check that the directions of the wedges cover [0, 360).
bool covers_all_directions(std::span<const Wedge> wedges);

/// Plane-coverage check for unbounded wedges: exact directional union plus
/// kCoverageSamples deterministic samples in the disk centred at the apex
/// centroid with radius bound * apex diameter (diameter 0 counts as 1).
bool verify_coverage(std::span<const Wedge> wedges, double bound);

}  // namespace bast
