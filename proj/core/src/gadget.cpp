#include "bast/gadget.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "bast/error.hpp"

namespace bast {

Point RigidMotion::to_canonical(const Point& p) const {
  Point q = rotate(p - translation, -rotation_deg);
  if (reflected) q.y = -q.y;
  return q;
}

Point RigidMotion::from_canonical(const Point& p) const {
  Point q = p;
  if (reflected) q.y = -q.y;
  return rotate(q, rotation_deg) + translation;
}

Direction RigidMotion::bisector_from_canonical(double canonical_deg) const {
  return Direction(rotation_deg + (reflected ? -canonical_deg : canonical_deg));
}

std::array<double, 3> triangle_angles(const std::array<Point, 3>& s) {
  std::array<double, 3> angles{};
  for (int i = 0; i < 3; ++i) {
    const Point u = s[(i + 1) % 3] - s[i];
    const Point v = s[(i + 2) % 3] - s[i];
    angles[i] = to_degrees(std::atan2(std::abs(cross(u, v)), dot(u, v)));
  }
  return angles;
}

namespace {

bool mutual(const Wedge& p, const Wedge& q) { return wedge_contains(p, q.apex) && wedge_contains(q, p.apex); }

// Indices ordered by ascending angle; angles equal within tolerance keep
// ascending index order.
std::array<std::size_t, 3> roles_by_angle(const std::array<double, 3>& angles) {
  std::array<std::size_t, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return angles[l] < angles[r]; });
  for (int pass = 0; pass < 2; ++pass) {
    for (int k = 0; k + 1 < 3; ++k) {
      if (std::abs(angles[idx[k]] - angles[idx[k + 1]]) <= kAngleTolerance && idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
      }
    }
  }
  return idx;
}

void require_distinct(std::span<const Point> s) { require_valid_points(s); }

}  // namespace

TripletOrientation orient_triplet(const std::array<Point, 3>& s) {
  require_distinct(s);
  const auto order = roles_by_angle(triangle_angles(s));

  TripletOrientation out;
  out.b = order[0];
  out.c = order[1];
  out.a = order[2];

  RigidMotion& m = out.transform;
  m.translation = s[out.b];
  m.rotation_deg = direction(s[out.b], s[out.c]).degrees();
  m.reflected = m.to_canonical(s[out.a]).y < 0.0;

  out.wedges[out.a] = make_wedge(s[out.a], m.bisector_from_canonical(240.0), kTripletAperture);
  out.wedges[out.b] = make_wedge(s[out.b], m.bisector_from_canonical(0.0), kTripletAperture);
  out.wedges[out.c] = make_wedge(s[out.c], m.bisector_from_canonical(120.0), kTripletAperture);

  if (!mutual(out.wedges[out.a], out.wedges[out.b]) || !mutual(out.wedges[out.b], out.wedges[out.c])) {
    throw Error(ErrorCode::kInvariantViolation, "triplet gadget lost an inner edge");
  }
  if (!verify_coverage(out.wedges, 4.0)) {
    throw Error(ErrorCode::kInvariantViolation, "triplet gadget does not cover the plane");
  }
  return out;
}

std::array<Wedge, 2> orient_pair(const Point& p, const Point& q, double aperture) {
  const Direction pq = direction(p, q);
  return {make_wedge(p, pq, aperture), make_wedge(q, pq.reversed(), aperture)};
}

bool covers_all_directions(std::span<const Wedge> wedges) {
  std::vector<AngleInterval> arcs;
  arcs.reserve(wedges.size());
  for (const auto& w : wedges) arcs.push_back(w.directions());
  return covers_full_circle(arcs);
}

namespace {

const std::vector<Point>& unit_disk_pattern() {
  static const std::vector<Point> pattern = disk_samples({0.0, 0.0}, 1.0, kCoverageSamples);
  return pattern;
}

}  // namespace

bool verify_coverage(std::span<const Wedge> wedges, double bound) {
  if (wedges.empty() || !covers_all_directions(wedges)) return false;
  std::vector<Point> apexes;
  std::vector<FastWedgeTest> tests;
  for (const auto& w : wedges) {
    apexes.push_back(w.apex);
    tests.emplace_back(w);
  }
  double extent = diameter(apexes);
  if (extent <= 0.0) extent = 1.0;
  const Point center = centroid(apexes);
  const double radius = bound * extent;
  std::size_t last_hit = 0;
  for (const Point& u : unit_disk_pattern()) {
    const Point q{center.x + radius * u.x, center.y + radius * u.y};
    // Neighbouring samples usually fall in the same wedge.
    if (tests[last_hit].contains(q)) continue;
    bool hit = false;
    for (std::size_t k = 0; k < tests.size() && !hit; ++k) {
      if (k != last_hit && tests[k].contains(q)) {
        hit = true;
        last_hit = k;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Quadrant k in a frame: k=0 NE, 1 NW, 2 SW, 3 SE (bisector frame+45+90k).
bool quadrant_contains(int k, const Point& apex, const Point& q, double slack) {
  const bool east = q.x >= apex.x - slack;
  const bool west = q.x <= apex.x + slack;
  const bool north = q.y >= apex.y - slack;
  const bool south = q.y <= apex.y + slack;
  switch (k) {
    case 0: return east && north;
    case 1: return west && north;
    case 2: return west && south;
    default: return east && south;
  }
}

std::vector<double> cell_representatives(std::vector<double> coords, double merge) {
  std::sort(coords.begin(), coords.end());
  std::vector<double> uniq;
  for (double c : coords) {
    if (uniq.empty() || c - uniq.back() > merge) uniq.push_back(c);
  }
  std::vector<double> reps{uniq.front() - 1.0, uniq.back() + 1.0};
  for (std::size_t i = 0; i + 1 < uniq.size(); ++i) reps.push_back(0.5 * (uniq[i] + uniq[i + 1]));
  return reps;
}

// Exact plane coverage for four closed quadrants sharing one frame: the
// uncovered set is open, so it is empty iff every open cell of the grid
// spanned by the apex coordinates is covered.
bool quadrants_cover_plane(const std::array<Point, 4>& frame_apex, const std::array<int, 4>& quadrant, double scale) {
  const double merge = kDistanceTolerance * scale;
  std::vector<double> xs, ys;
  for (const auto& p : frame_apex) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const auto rx = cell_representatives(xs, merge);
  const auto ry = cell_representatives(ys, merge);
  for (double x : rx) {
    for (double y : ry) {
      bool hit = false;
      for (int i = 0; i < 4 && !hit; ++i) hit = quadrant_contains(quadrant[i], frame_apex[i], {x, y}, 0.0);
      if (!hit) return false;
    }
  }
  return true;
}

struct QuadCandidate {
  int edges = 0;
  double length = 0.0;
  std::size_t rank = 0;
  double frame = 0.0;
  std::array<int, 4> quadrant{};
};

}  // namespace

QuadrupletOrientation orient_quadruplet(const std::array<Point, 4>& s) {
  require_distinct(s);

  std::vector<double> frames{0.0};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double f = std::fmod(direction(s[i], s[j]).degrees(), 90.0);
      const bool seen = std::any_of(frames.begin(), frames.end(), [&](double g) {
        const double d = std::abs(f - g);
        return std::min(d, 90.0 - d) <= kAngleTolerance;
      });
      if (!seen) frames.push_back(f);
    }
  }

  // Same test as wedge_contains for distinct points, without repeated atan2.
  std::array<std::array<Direction, 4>, 4> dirs{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) dirs[i][j] = direction(s[i], s[j]);
    }
  }

  double scale = 1.0;
  for (const auto& p : s) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});

  std::vector<QuadCandidate> accepted;
  std::size_t rank = 0;
  for (double frame : frames) {
    std::array<Point, 4> local{};
    for (int i = 0; i < 4; ++i) local[i] = rotate(s[i], -frame);
    std::array<int, 4> quadrant{0, 1, 2, 3};
    do {
      ++rank;
      std::array<AngleInterval, 4> arc{};
      for (int i = 0; i < 4; ++i) arc[i] = {Direction(frame + 90.0 * quadrant[i]), kQuadrupletAperture};
      int edges = 0;
      double length = 0.0;
      std::array<int, 4> comp{0, 1, 2, 3};
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (!arc[i].contains(dirs[i][j]) || !arc[j].contains(dirs[j][i])) continue;
          ++edges;
          length += distance(s[i], s[j]);
          const int from = comp[j], to = comp[i];
          for (int& c : comp) {
            if (c == from) c = to;
          }
        }
      }
      const bool connected = std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp[0]; });
      if (!connected) continue;
      if (!quadrants_cover_plane(local, quadrant, scale)) continue;
      accepted.push_back({edges, length, rank, frame, quadrant});
    } while (std::next_permutation(quadrant.begin(), quadrant.end()));
  }

  std::sort(accepted.begin(), accepted.end(), [](const QuadCandidate& l, const QuadCandidate& r) {
    if (l.edges != r.edges) return l.edges > r.edges;
    if (l.length != r.length) return l.length < r.length;
    return l.rank < r.rank;
  });

  for (const auto& cand : accepted) {
    QuadrupletOrientation out;
    out.frame_deg = cand.frame;
    for (int i = 0; i < 4; ++i) {
      out.wedges[i] = make_wedge(s[i], Direction(cand.frame + 45.0 + 90.0 * cand.quadrant[i]), kQuadrupletAperture);
    }
    if (verify_coverage(out.wedges, 4.0)) {
      out.verified = true;
      return out;
    }
  }
  throw Error(ErrorCode::kGadgetSearchFailed, "no quadrant frame yields a connected covering orientation");
}

}  // namespace bast
