#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bast/approx.hpp"
#include "bast/error.hpp"
#include "bast/generate.hpp"
#include "bast/oracle.hpp"
#include "test_util.hpp"

namespace bast {
namespace {

CommGraph path_graph(std::size_t n) {
  CommGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1);
  return g;
}

TEST(BruteForce, Examples) {
  EXPECT_FALSE(brute_force_alpha_mst(equilateral(), 59).has_value());
  const auto line = brute_force_alpha_mst(collinear(3, 1), 180);
  ASSERT_TRUE(line.has_value());
  EXPECT_DOUBLE_EQ(line->weight, 2.0);
  const auto ec = brute_force_alpha_mst(equilateral_center(), 200);
  ASSERT_TRUE(ec.has_value());
  EXPECT_NEAR(ec->weight, 1 + 2 / std::numbers::sqrt3, 1e-12);
  EXPECT_NEAR(ec->weight / euclidean_mst(equilateral_center()).weight, (2 + std::numbers::sqrt3) / 3, 1e-6);
}

TEST(BruteForce, LimitsAndTrivialSizes) {
  EXPECT_THROW(brute_force_alpha_mst(collinear(9, 1), 180), Error);
  EXPECT_THROW(brute_force_alpha_mst(PointSet{}, 180), Error);
  EXPECT_DOUBLE_EQ(brute_force_alpha_mst(collinear(1, 1), 10)->weight, 0.0);
  EXPECT_DOUBLE_EQ(brute_force_alpha_mst(collinear(2, 1), 1)->weight, 1.0);
}

TEST(BruteForce, FullAngleIsTheMst) {
  Rng rng(61);
  for (int k = 0; k < 50; ++k) {
    const PointSet pts = test::random_points(rng, 2 + rng.below(6));
    EXPECT_NEAR(brute_force_alpha_mst(pts, 360)->weight, euclidean_mst(pts).weight, 1e-9);
  }
}

TEST(BruteForce, CollinearRatiosClimbTowardTwo) {
  // Oracle-derived: (2n - 3) / (n - 1) for n evenly spaced points.
  const double r4 = brute_force_alpha_mst(collinear(4, 1), 179.9)->weight / 3.0;
  const double r5 = brute_force_alpha_mst(collinear(5, 1), 179.9)->weight / 4.0;
  EXPECT_NEAR(r4, 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(r5, 7.0 / 4.0, 1e-12);
  EXPECT_LT(r4, r5);
  EXPECT_LT(r5, 2.0);
}

TEST(BruteForce, BuildersNeverBeatIt) {
  Rng rng(67);
  for (int k = 0; k < 30; ++k) {
    const PointSet pts = test::random_points(rng, 4 + rng.below(4));
    for (double alpha : {90.0, 120.0, 180.0}) {
      const AlphaST st = build_alpha_st(pts, alpha);
      EXPECT_TRUE(is_alpha_st(pts, st.tree.edges, alpha));
      const auto best = brute_force_alpha_mst(pts, alpha);
      ASSERT_TRUE(best.has_value());
      EXPECT_LE(best->weight, st.tree.weight * (1 + 1e-9));
    }
  }
}

TEST(Hamiltonian, PathExamples) {
  EXPECT_TRUE(hamiltonian_path_exists(path_graph(5)));
  CommGraph star(5);
  for (std::size_t i = 1; i < 5; ++i) star.add_edge(0, i, 1);
  EXPECT_FALSE(hamiltonian_path_exists(star));
  const GridGraph sq = square_grid({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_TRUE(hamiltonian_path_exists(sq.graph()));
  EXPECT_TRUE(hamiltonian_cycle_exists(sq.graph()));
  EXPECT_FALSE(hamiltonian_cycle_exists(path_graph(4)));
  EXPECT_FALSE(hamiltonian_cycle_exists(path_graph(2)));
  EXPECT_TRUE(hamiltonian_path_exists(CommGraph(1)));
  EXPECT_THROW(hamiltonian_path_exists(CommGraph(17)), Error);
}

TEST(SquareReduction, Examples) {
  const auto single = square_grid_reduction(square_grid({{0, 0}}));
  EXPECT_DOUBLE_EQ(single.target_weight, 0.25);
  EXPECT_NEAR(distance(single.points[0], single.points[1]), 0.25, 1e-15);

  const auto edge = square_grid_reduction(square_grid({{0, 0}, {1, 0}}));
  EXPECT_NEAR(edge.target_weight, 1.45, 1e-12);

  const auto path = square_grid_reduction(square_grid({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(path.black, 2u);
  EXPECT_EQ(path.white, 1u);
  EXPECT_NEAR(path.target_weight, 2.7, 1e-12);
  EXPECT_NEAR(brute_force_alpha_mst(path.points, 180)->weight, path.target_weight, 1e-9);
}

TEST(SquareReduction, SatellitesStayFarAndDegreeFourRejected) {
  const GridGraph comb = square_grid({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}});
  const auto inst = square_grid_reduction(comb);
  const std::size_t n = comb.size();
  ASSERT_EQ(inst.points.size(), 2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < inst.points.size(); ++k) {
      if (k != v && k != n + v) {
        EXPECT_GT(distance(inst.points[n + v], inst.points[k]), 1.0);
      }
    }
  }
  const GridGraph plus = square_grid({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  try {
    square_grid_reduction(plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooHigh);
  }
}

TEST(HexGrid, UnitEdgesOnTheTiling) {
  const GridGraph hex = hex_grid(hex_cell_vertices({0, 0}));
  EXPECT_EQ(hex.size(), 6u);
  EXPECT_EQ(hex.edges.size(), 6u);
  for (const auto& e : hex.edges) EXPECT_NEAR(distance(hex.vertices[e.u], hex.vertices[e.v]), 1.0, 1e-12);
  EXPECT_THROW(hex_grid({{0, 0}}), Error);
  EXPECT_THROW(hex_grid({{1, 0}, {1, 0}}), Error);
}

TEST(HexReduction, DegreeTwoAddsTwoLeaves) {
  const GridGraph hex = hex_grid(hex_cell_vertices({0, 0}));
  const GridGraph red = hex_grid_reduction(hex);
  ASSERT_EQ(red.size(), 8u);
  const CommGraph g = red.graph();
  EXPECT_EQ(g.neighbors(6).size(), 1u);
  EXPECT_EQ(g.neighbors(7).size(), 1u);
  EXPECT_EQ(red.edges.size(), hex.edges.size() + 2);
  EXPECT_TRUE(hamiltonian_cycle_exists(hex.graph()));
  EXPECT_TRUE(hamiltonian_path_exists(g));
}

TEST(HexReduction, DegreeZeroAndOne) {
  const GridGraph lone = hex_grid({{1, 0}});
  EXPECT_EQ(hex_grid_reduction(lone).size(), 1u);
  const GridGraph stick = hex_grid({{1, 0}, {2, 0}, {3, -1}});
  const GridGraph red = hex_grid_reduction(stick);
  ASSERT_EQ(red.size(), 6u);
  EXPECT_EQ(red.edges.size(), stick.edges.size() + 3);
  EXPECT_FALSE(hamiltonian_path_exists(red.graph()));
  EXPECT_FALSE(hamiltonian_cycle_exists(stick.graph()));
}

TEST(HexReduction, ForkMovesWhenTheTopIsCrowded) {
  // The topmost vertex has degree 1 but no room for a fork of new points.
  const GridGraph g = hex_grid({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {1, 2}, {3, 2}});
  const GridGraph red = hex_grid_reduction(g);
  ASSERT_EQ(red.size(), 9u);
  EXPECT_EQ(red.edges.size(), g.edges.size() + 3);
  EXPECT_FALSE(hamiltonian_cycle_exists(g.graph()));
  EXPECT_FALSE(hamiltonian_path_exists(red.graph()));
}

TEST(HexReduction, PendantLeavesWhenNoForkFits) {
  // A hexagon with an outward spoke at every corner.
  const GridGraph g = hex_grid(
      {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {-2, 0}, {0, -2}, {2, 0}, {2, -2}, {0, 2}, {-2, 2}});
  const GridGraph red = hex_grid_reduction(g);
  ASSERT_EQ(red.size(), 14u);
  const CommGraph rg = red.graph();
  EXPECT_EQ(rg.neighbors(12).size(), 1u);
  EXPECT_EQ(rg.neighbors(13).size(), 1u);
  EXPECT_FALSE(hamiltonian_cycle_exists(g.graph()));
  EXPECT_FALSE(hamiltonian_path_exists(rg));
}

}  // namespace
}  // namespace bast
