#include <gtest/gtest.h>

#include <cmath>

#include "bast/error.hpp"
#include "bast/geom.hpp"
#include "test_util.hpp"

namespace bast {
namespace {

TEST(Direction, AxesAndDiagonal) {
  EXPECT_DOUBLE_EQ(direction({0, 0}, {1, 0}).degrees(), 0.0);
  EXPECT_DOUBLE_EQ(direction({0, 0}, {0, 1}).degrees(), 90.0);
  EXPECT_DOUBLE_EQ(direction({0, 0}, {-1, -1}).degrees(), 225.0);
}

TEST(Direction, NormalizesIntoRange) {
  EXPECT_DOUBLE_EQ(Direction(-90).degrees(), 270.0);
  EXPECT_DOUBLE_EQ(Direction(720).degrees(), 0.0);
  EXPECT_DOUBLE_EQ(Direction(359.5 + 1.0).degrees(), 0.5);
  const double d = Direction(-1e-18).degrees();
  EXPECT_GE(d, 0.0);
  EXPECT_LT(d, 360.0);
}

TEST(Direction, DuplicatePointThrows) {
  try {
    direction({1, 1}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoint);
  }
}

TEST(Direction, ReverseIsOpposite) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Point p{rng.uniform(), rng.uniform()}, q{rng.uniform(), rng.uniform()};
    EXPECT_TRUE(same_direction(direction(p, q), direction(q, p).reversed(), 1e-9));
  }
}

TEST(WedgeContains, Examples) {
  const Wedge w = make_wedge({0, 0}, Direction(0), 120);
  EXPECT_TRUE(wedge_contains(w, {1, 0.5}));
  EXPECT_TRUE(wedge_contains(w, {1, std::tan(to_radians(60))}));
  EXPECT_TRUE(wedge_contains(w, {1, -std::tan(to_radians(60))}));
  EXPECT_FALSE(wedge_contains(w, {-1, 0}));
  EXPECT_TRUE(wedge_contains(w, {0, 0}));
}

TEST(WedgeContains, RadiusIsClosed) {
  const Wedge w = make_wedge({0, 0}, Direction(90), 90, 2.0);
  EXPECT_TRUE(wedge_contains(w, {0, 2}));
  EXPECT_FALSE(wedge_contains(w, {0, 2.001}));
}

TEST(WedgeContains, RejectsBadShape) {
  EXPECT_THROW(make_wedge({0, 0}, Direction(0), 0.0), Error);
  EXPECT_THROW(make_wedge({0, 0}, Direction(0), 90.0, -1.0), Error);
}

TEST(WedgeContains, InvariantUnderRigidMotion) {
  Rng rng(17);
  for (int k = 0; k < 5000; ++k) {
    const Wedge w = make_wedge({rng.uniform(), rng.uniform()}, Direction(rng.uniform(0, 360)), rng.uniform(10, 350));
    const Point q{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double rot = rng.uniform(0, 360);
    const Point shift{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Wedge moved = make_wedge(rotate(w.apex, rot) + shift, w.bisector + rot, w.aperture);
    const Point mq = rotate(q, rot) + shift;
    // Skip queries within the tolerance band of a bounding ray.
    const double off = std::abs(angle_difference(direction(w.apex, q).degrees(), w.bisector.degrees()));
    if (std::abs(off - w.aperture / 2) < 1e-6) continue;
    EXPECT_EQ(wedge_contains(w, q), wedge_contains(moved, mq));
  }
}

TEST(AngularSpread, Examples) {
  const std::vector<Point> one{{1, 0}};
  const std::vector<Point> two{{1, 0}, {-1, 0}};
  const std::vector<Point> three{{1, 0}, {0, 1}, {-1, 0}};
  EXPECT_DOUBLE_EQ(angular_spread({0, 0}, one), 0.0);
  EXPECT_DOUBLE_EQ(angular_spread({0, 0}, two), 180.0);
  EXPECT_DOUBLE_EQ(angular_spread({0, 0}, three), 180.0);
  const std::vector<Point> wrap{{1, 0.1}, {1, -0.1}};
  EXPECT_NEAR(angular_spread({0, 0}, wrap), 2 * to_degrees(std::atan(0.1)), 1e-12);
}

TEST(AngularSpread, WitnessWedgeExistsIffSpreadFits) {
  Rng rng(23);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Point> nbrs;
    const int m = 1 + static_cast<int>(rng.below(5));
    for (int i = 0; i < m; ++i) nbrs.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const Point c{rng.uniform(-0.01, 0.01) + 3, 3};
    const double spread = angular_spread(c, nbrs);
    const double alpha = rng.uniform(1, 359);
    const Wedge w = witness_wedge(c, nbrs, alpha);
    bool all = true;
    for (const auto& q : nbrs) all = all && wedge_contains(w, q);
    if (std::abs(spread - alpha) > 1e-7) {
      EXPECT_EQ(all, spread <= alpha);
    }
  }
}

TEST(Sextant, HalfOpenUpward) {
  EXPECT_EQ(sextant_of(Direction(30)), 1);
  EXPECT_EQ(sextant_of(Direction(90)), 2);
  EXPECT_EQ(sextant_of(Direction(60)), 2);
  EXPECT_EQ(sextant_of(Direction(0)), 1);
  EXPECT_EQ(sextant_of(Direction(359.999)), 6);
}

TEST(AngleInterval, WrapAroundAndCoverage) {
  const AngleInterval arc{Direction(300), 120};
  EXPECT_TRUE(arc.contains(Direction(10)));
  EXPECT_TRUE(arc.contains(Direction(60)));
  EXPECT_FALSE(arc.contains(Direction(61)));
  const std::vector<AngleInterval> thirds{{Direction(0), 120}, {Direction(120), 120}, {Direction(240), 120}};
  EXPECT_TRUE(covers_full_circle(thirds));
  const std::vector<AngleInterval> gap{{Direction(0), 120}, {Direction(121), 120}, {Direction(240), 120}};
  EXPECT_FALSE(covers_full_circle(gap));
}

TEST(Points, ValidationRejectsDuplicatesAndNonFinite) {
  const std::vector<Point> dup{{0, 0}, {1, 0}, {0, 0}};
  EXPECT_THROW(require_valid_points(dup), Error);
  const std::vector<Point> inf{{0, 0}, {INFINITY, 0}};
  EXPECT_THROW(require_valid_points(inf), Error);
  const std::vector<Point> ok{{0, 0}, {1e-6, 0}};
  EXPECT_NO_THROW(require_valid_points(ok));
}

TEST(FastWedgeTest, AgreesAwayFromBoundary) {
  Rng rng(29);
  for (int k = 0; k < 20000; ++k) {
    const Wedge w = make_wedge({rng.uniform(), rng.uniform()}, Direction(rng.uniform(0, 360)), rng.uniform(10, 360));
    const Point q{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const double off = std::abs(angle_difference(direction(w.apex, q).degrees(), w.bisector.degrees()));
    if (std::abs(off - w.aperture / 2) < 1e-6) continue;
    EXPECT_EQ(FastWedgeTest(w).contains(q), wedge_contains(w, q));
  }
}

}  // namespace
}  // namespace bast
