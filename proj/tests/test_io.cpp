#include <gtest/gtest.h>

#include "bast/approx.hpp"
#include "bast/error.hpp"
#include "bast/gadget.hpp"
#include "bast/io.hpp"
#include "bast/report.hpp"
#include "bast/spanner.hpp"
#include "test_util.hpp"

namespace bast {
namespace {

TEST(ParseInstance, JsonAndCsv) {
  const Instance a = parse_instance(R"({"points": [[0,0],[1,0]]})");
  const Instance b = parse_instance("0,0\n1,0\n");
  EXPECT_EQ(a.points, (PointSet{{0, 0}, {1, 0}}));
  EXPECT_EQ(a.points, b.points);
  const Instance c = parse_instance(" 0.5 , -2 \r\n\n3e-1,4\n", InstanceFormat::kCsv);
  EXPECT_EQ(c.points, (PointSet{{0.5, -2}, {0.3, 4}}));
}

TEST(ParseInstance, Meta) {
  const Instance a = parse_instance(R"({"points": [[0,0]], "meta": {"generator": "g", "seed": 18446744073709551615, "n": 1}})");
  EXPECT_EQ(a.generator, "g");
  EXPECT_EQ(a.seed, 18446744073709551615ULL);
  EXPECT_EQ(a.meta.at("n"), 1.0);
}

TEST(ParseInstance, Duplicates) {
  try {
    parse_instance(R"({"points": [[0,0],[0,0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePoint);
  }
  const Instance d = parse_instance(R"({"points": [[0,0],[0,0],[1,1]]})", InstanceFormat::kAuto,
                                    DuplicatePolicy::kDeduplicate);
  EXPECT_EQ(d.points.size(), 2u);
}

TEST(ParseInstance, ErrorsCarryPosition) {
  auto message = [](std::string_view text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("0,0\n1,x\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("0,0\n1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message(R"({"points": [[0,0], [1]]})").find("points[1]"), std::string::npos);
  EXPECT_NE(message(R"({"points": [[0,0],)").find("byte"), std::string::npos);
  EXPECT_NE(message(R"({"pts": []})").find("points"), std::string::npos);
}

TEST(EmitInstance, RoundTripsExactly) {
  Rng rng(71);
  Instance inst;
  inst.points = test::random_points(rng, 50);
  inst.seed = 71;
  inst.generator = "uniform-square";
  for (auto fmt : {InstanceFormat::kJson, InstanceFormat::kCsv}) {
    EXPECT_EQ(parse_instance(emit_instance(inst, fmt)).points, inst.points);
  }
  const Instance back = parse_instance(emit_instance(inst));
  EXPECT_EQ(back.seed, inst.seed);
  EXPECT_EQ(emit_instance(back), emit_instance(inst));
}

TEST(Result, RoundTripOnCanonicalForm) {
  Rng rng(73);
  const PointSet pts = test::random_points(rng, 24);
  const AlphaST st = build_two_thirds_pi_st(pts);
  const ResultFile r = make_alpha_result(pts, st, verify_alpha_st(pts, st));
  const std::string text = emit_result(r);
  EXPECT_EQ(emit_result(parse_result(text)), text);
  EXPECT_EQ(canonicalize_result(text), text);
  EXPECT_EQ(parse_result(text), parse_result(canonicalize_result(text)));
  EXPECT_EQ(emit_result(r), text);
}

TEST(Result, TwelveSignificantDigits) {
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round12(123456.789012345678), 123456.789012);
  EXPECT_EQ(round12(-0.0), 0.0);
}

TEST(Result, ParseErrors) {
  EXPECT_THROW(parse_result("{"), Error);
  EXPECT_THROW(parse_result(R"({"kind": "alpha-st"})"), Error);
}

TEST(Result, VerifyDetectsTampering) {
  Rng rng(79);
  const PointSet pts = test::random_points(rng, 16);
  const AlphaST st = build_half_pi_st(pts);
  ResultFile r = parse_result(emit_result(make_alpha_result(pts, st, verify_alpha_st(pts, st))));
  EXPECT_TRUE(verify_result(pts, r).pass);
  ResultFile bad = r;
  bad.wedges[0].bisector_deg += 180;
  EXPECT_FALSE(verify_result(pts, bad).pass);
  bad = r;
  bad.summary.weight *= 0.5;
  EXPECT_FALSE(verify_result(pts, bad).pass);
  bad = r;
  bad.edges.pop_back();
  EXPECT_FALSE(verify_result(pts, bad).pass);
}

TEST(Result, SpannerAndOracleVerify) {
  const PointSet pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3.5, 0.5}};
  const ResultFile sp = parse_result(emit_result(make_spanner_result(build_spanner(pts))));
  EXPECT_TRUE(verify_result(pts, sp).pass);
  ResultFile bad = sp;
  bad.edges.clear();
  EXPECT_FALSE(verify_result(pts, bad).pass);

  const PointSet tri{{0, 0}, {1, 0}, {0.5, 0.2}};
  const ResultFile orc = make_oracle_result(tri, 150, std::nullopt);
  EXPECT_FALSE(verify_result(tri, orc).pass);
}

TEST(Svg, PointsOnlyAndSectors) {
  const PointSet pts{{0, 0}, {1, 0}, {0.5, 0.8}};
  const std::string plain = emit_svg(pts, {}, {});
  EXPECT_EQ(plain.find("<path"), std::string::npos);
  EXPECT_EQ(plain.find("<line"), std::string::npos);
  EXPECT_NE(plain.find("width=\"800\""), std::string::npos);
  const auto o = orient_triplet({pts[0], pts[1], pts[2]});
  const std::vector<Edge> edges{Edge(o.a, o.b), Edge(o.b, o.c)};
  const std::string svg = emit_svg(pts, o.wedges, edges);
  std::size_t paths = 0;
  for (auto p = svg.find("<path"); p != std::string::npos; p = svg.find("<path", p + 1)) ++paths;
  EXPECT_EQ(paths, 3u);
  EXPECT_EQ(svg, emit_svg(pts, o.wedges, edges));
  // The 5% margin puts the left-most point at x = 40.
  EXPECT_NE(svg.find("cx=\"40.00\""), std::string::npos);
}

}  // namespace
}  // namespace bast
