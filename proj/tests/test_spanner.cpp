#include <gtest/gtest.h>

#include "bast/error.hpp"
#include "bast/generate.hpp"
#include "bast/spanner.hpp"
#include "test_util.hpp"

namespace bast {
namespace {

TEST(NeighborIndex, QueryAndDelete) {
  const PointSet pts{{0.5, 0}, {3, 3}};
  NeighborIndex idx(pts);
  EXPECT_EQ(idx.query({0, 0}, true), 0u);
  EXPECT_FALSE(idx.query({0, 0}).has_value());
  EXPECT_EQ(idx.remaining(), 1u);
  const PointSet far{{1.5, 0}};
  NeighborIndex idx2(far);
  EXPECT_FALSE(idx2.query({0, 0}).has_value());
}

TEST(NeighborIndex, ReturnsLowestIndexInRange) {
  Rng rng(3);
  const PointSet pts = test::random_points(rng, 400, 6.0);
  NeighborIndex idx(pts);
  for (int k = 0; k < 200; ++k) {
    const Point q{rng.uniform(0, 6), rng.uniform(0, 6)};
    std::optional<std::size_t> expected;
    for (std::size_t i = 0; i < pts.size() && !expected; ++i) {
      if (idx.contains(i) && distance(q, pts[i]) <= 1.0) expected = i;
    }
    EXPECT_EQ(idx.query(q, true), expected);
  }
}

TEST(GreedyComponents, Examples) {
  const PointSet tri{{0, 0}, {0.5, 0}, {0.2, 0.3}};
  const auto one = greedy_components(tri);
  ASSERT_EQ(one.components.size(), 1u);
  EXPECT_EQ(one.components[0].size(), 3u);

  const PointSet line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const auto p = greedy_components(line);
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(p.components[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.components[1], (std::vector<std::size_t>{3}));
  EXPECT_EQ(p.anchor[1], 2u);

  const PointSet pair{{0, 0}, {0.7, 0}};
  const auto q = greedy_components(pair);
  ASSERT_EQ(q.components.size(), 1u);
  EXPECT_EQ(q.components[0].size(), 2u);
  EXPECT_FALSE(q.anchor[0].has_value());
}

TEST(GreedyComponents, DisconnectedThrows) {
  const PointSet far{{0, 0}, {3, 0}};
  try {
    greedy_components(far);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedUDG);
  }
}

TEST(GreedyComponents, ClaimHoldsOnRandomInstances) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const PointSet pts = connected_udg(80, 4.0, rng);
    const auto part = greedy_components(pts);
    const CommGraph udg = unit_disk_graph(pts);
    for (std::size_t c = 0; c < part.components.size(); ++c) {
      const auto& comp = part.components[c];
      // Each piece is connected in the unit disk graph.
      if (comp.size() >= 2) {
        std::size_t links = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
          for (std::size_t j = i + 1; j < comp.size(); ++j) links += udg.has_edge(comp[i], comp[j]);
        }
        EXPECT_GE(links, comp.size() - 1);
      }
      if (comp.size() == 3) continue;
      for (std::size_t v : comp) {
        for (std::size_t w : udg.neighbors(v)) {
          if (part.component_of[w] != c) {
            EXPECT_EQ(part.size_of(w), 3u);
          }
        }
      }
    }
  }
}

TEST(OrientComponents, SingletonFacesCoveringApex) {
  const PointSet line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const auto part = greedy_components(line);
  const auto w = orient_components(line, part);
  for (const auto& x : w) EXPECT_EQ(x.radius, kSpannerRadius);
  const CommGraph g = induced_graph(line, w);
  bool linked = false;
  for (std::size_t x : g.neighbors(3)) {
    linked = linked || (part.component_of[x] == 0 && distance(line[3], line[x]) <= 4.0);
  }
  EXPECT_TRUE(linked);
}

TEST(OrientComponents, WholeGraphSmallCases) {
  const PointSet single{{1, 1}};
  const auto w1 = orient_components(single, greedy_components(single));
  EXPECT_EQ(w1[0].bisector.degrees(), 0.0);
  const PointSet pair{{0, 0}, {0.5, 0.5}};
  const auto w2 = orient_components(pair, greedy_components(pair));
  EXPECT_EQ(induced_graph(pair, w2).edge_count(), 1u);
}

TEST(OrientComponents, RejectsMalformedPartition) {
  const PointSet pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  auto part = greedy_components(pts);
  part.anchor[1] = std::nullopt;
  EXPECT_THROW(orient_components(pts, part), Error);
  part = greedy_components(pts);
  part.components[0].push_back(3);
  EXPECT_THROW(orient_components(pts, part), Error);
}

TEST(BuildSpanner, ThreeClosePoints) {
  const PointSet pts{{0, 0}, {0.6, 0}, {0.3, 0.4}};
  const auto sp = build_spanner(pts);
  EXPECT_LE(sp.hop_stretch, 2);
  EXPECT_GE(sp.graph.edge_count(), 2u);
}

TEST(BuildSpanner, PairInsideLargerInstance) {
  // Greedy gives {0,1,2}, {3,4}: a pair whose neighbours all sit in the triple.
  const PointSet pts{{0, 0}, {0.9, 0}, {-0.9, 0}, {1.8, 0}, {2.7, 0}};
  const auto sp = build_spanner(pts);
  ASSERT_EQ(sp.partition.components.size(), 2u);
  EXPECT_EQ(sp.partition.components[1].size(), 2u);
  EXPECT_LE(*hop_distance(sp.graph, 3, 4), 4);
}

TEST(BuildSpanner, RandomInstancesMeetBounds) {
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const PointSet pts = connected_udg(200, 10.0, rng);
    const auto sp = build_spanner(pts);
    EXPECT_LE(sp.max_edge_length, 7.0 + 1e-9);
    EXPECT_LE(sp.hop_stretch, 6);
    EXPECT_GE(sp.hop_stretch, 1);
    EXPECT_TRUE(sp.hops.cases_ok);
    EXPECT_TRUE(is_connected(sp.graph));
  }
}

TEST(BuildSpanner, DisconnectedInput) { EXPECT_THROW(build_spanner(PointSet{{0, 0}, {3, 0}}), Error); }

TEST(VerifyHopSpanner, IdentityAndMissingBridge) {
  const PointSet pts{{0, 0}, {1, 0}, {2, 0}};
  const CommGraph udg = unit_disk_graph(pts);
  EXPECT_TRUE(verify_hop_spanner(udg, udg, 1).pass);
  CommGraph cut(3);
  cut.add_edge(0, 1, 1);
  const HopReport r = verify_hop_spanner(cut, udg, 6);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violation, Edge(1, 2));
}

TEST(VerifyHopSpanner, CaseBounds) {
  EXPECT_EQ(hop_case_bound(HopCase::kSameTriple), 2);
  EXPECT_EQ(hop_case_bound(HopCase::kSamePair), 4);
  EXPECT_EQ(hop_case_bound(HopCase::kBothTriples), 5);
  EXPECT_EQ(hop_case_bound(HopCase::kMixed), 6);
}

}  // namespace
}  // namespace bast
