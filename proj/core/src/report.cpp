#include "bast/report.hpp"

#include <algorithm>
#include <cmath>

#include "bast/error.hpp"
#include "bast/oracle.hpp"

namespace bast {

ResultFile make_alpha_result(std::span<const Point> points, const AlphaST& st, const AlphaReport& report) {
  ResultFile r;
  r.kind = "alpha-st";
  r.pass = report.pass;
  r.summary.alpha = st.alpha;
  r.summary.weight = report.weight;
  r.summary.mst_weight = report.mst_weight;
  r.summary.ratio = report.ratio;
  r.summary.max_spread_deg = report.max_spread;
  r.checks = {{"spanning", report.spanning},
              {"spread", report.spread_violations.empty()},
              {"witnesses", report.witnesses_ok},
              {"ratio_bound", report.ratio_ok},
              {"charging_bound", report.charging_ok}};
  r.stats = {{"n", static_cast<double>(points.size())}, {"tour_weight", st.tour_weight}};
  if (report.bound) r.stats["ratio_bound"] = *report.bound;
  r.stats["bound_enforced"] = report.bound_enforced ? 1.0 : 0.0;
  r.wedges = to_records(st.wedges);
  r.edges = st.tree.edges;
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

ResultFile make_spanner_result(const SpannerResult& sp) {
  ResultFile r;
  r.kind = "spanner";
  r.pass = sp.hops.pass && sp.max_edge_length <= kSpannerRadius + length_slack(kSpannerRadius);
  double weight = 0.0;
  for (const auto& e : sp.graph.edges()) {
    weight += e.length;
    r.edges.push_back(e.edge);
  }
  r.summary.weight = weight;
  r.summary.hop_stretch = sp.hop_stretch;
  r.summary.max_edge_len = sp.max_edge_length;
  r.checks = {{"hop_bound", sp.hops.pass}, {"case_bounds", sp.hops.cases_ok}, {"edge_length", r.pass}};
  r.stats = {{"n", static_cast<double>(sp.wedges.size())},
             {"udg_edges", static_cast<double>(sp.hops.udg_edges)},
             {"triples", static_cast<double>(sp.stats.triples)},
             {"pairs", static_cast<double>(sp.stats.pairs)},
             {"singles", static_cast<double>(sp.stats.singles)},
             {"partition_ms", sp.stats.partition_ms},
             {"orient_ms", sp.stats.orient_ms},
             {"graph_ms", sp.stats.graph_ms},
             {"verify_ms", sp.stats.verify_ms},
             {"runtime_ms", sp.stats.partition_ms + sp.stats.orient_ms + sp.stats.graph_ms + sp.stats.verify_ms}};
  const char* names[] = {"hops_same_triple", "hops_same_pair", "hops_both_triples", "hops_mixed"};
  for (std::size_t k = 0; k < 4; ++k) r.stats[names[k]] = sp.hops.case_max[k];
  r.wedges = to_records(sp.wedges);
  return r;
}

ResultFile make_oracle_result(std::span<const Point> points, double alpha, const std::optional<SpanningTree>& tree) {
  ResultFile r;
  r.kind = "oracle";
  r.pass = true;
  r.summary.alpha = alpha;
  r.checks = {{"exists", tree.has_value()}};
  if (tree) {
    r.summary.weight = tree->weight;
    r.edges = tree->edges;
    if (points.size() >= 1) {
      const double mst = euclidean_mst(points).weight;
      r.summary.mst_weight = mst;
      r.summary.ratio = mst > 0.0 ? tree->weight / mst : 1.0;
    }
  }
  return r;
}

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

VerifyOutcome verify_result(std::span<const Point> points, const ResultFile& result) {
  VerifyOutcome out;
  auto fail = [&](std::string why) { out.failures.push_back(std::move(why)); };
  try {
    if (result.kind == "alpha-st") {
      if (!result.summary.alpha) throw Error(ErrorCode::kParseError, "alpha-st result lacks alpha");
      AlphaST st;
      st.alpha = *result.summary.alpha;
      st.wedges = from_records(points, result.wedges);
      st.tree.edges = result.edges;
      st.tree.weight = tree_weight(points, result.edges);
      if (points.size() >= 2) st.tour_weight = tsp_tour(points).weight;
      const AlphaReport rep = verify_alpha_st(points, st);
      if (!rep.spanning) fail("edges do not form a spanning tree");
      if (!rep.spread_violations.empty()) fail("angular spread exceeds alpha");
      if (!rep.witnesses_ok) fail("a tree edge is not supported by the wedges");
      if (!rep.ratio_ok) fail("weight exceeds the ratio bound");
      if (!rep.charging_ok) fail("weight exceeds the tour charging bound");
      if (!close(rep.weight, result.summary.weight)) fail("recorded weight differs from the recomputed weight");
    } else if (result.kind == "spanner") {
      const auto wedges = from_records(points, result.wedges);
      const CommGraph g = induced_graph(points, wedges);
      std::vector<Edge> edges;
      double max_len = 0.0;
      for (const auto& e : g.edges()) {
        edges.push_back(e.edge);
        max_len = std::max(max_len, e.length);
      }
      auto listed = result.edges;
      std::sort(listed.begin(), listed.end());
      if (listed != edges) fail("edge list differs from the graph induced by the wedges");
      if (max_len > kSpannerRadius + length_slack(kSpannerRadius)) fail("edge longer than 7");
      for (const auto& w : wedges) {
        if (!w.radius || *w.radius > kSpannerRadius + length_slack(kSpannerRadius)) {
          fail("wedge radius missing or above 7");
          break;
        }
      }
      const CommGraph udg = unit_disk_graph(points);
      const HopReport hops = verify_hop_spanner(g, udg, kSpannerHopBound);
      if (!hops.pass) fail("some unit disk edge has no path of at most 6 hops");
      if (result.summary.hop_stretch && *result.summary.hop_stretch != hops.max_hops) {
        fail("recorded hop stretch differs from the recomputed one");
      }
    } else if (result.kind == "oracle") {
      if (!result.summary.alpha) throw Error(ErrorCode::kParseError, "oracle result lacks alpha");
      const bool exists = result.checks.count("exists") ? result.checks.at("exists") : !result.edges.empty();
      const auto truth =
          points.size() <= kBruteForceMaxPoints ? brute_force_alpha_mst(points, *result.summary.alpha) : std::nullopt;
      if (exists) {
        if (!is_alpha_st(points, result.edges, *result.summary.alpha)) fail("edges are not an alpha-ST");
        if (!close(tree_weight(points, result.edges), result.summary.weight)) fail("recorded weight is wrong");
        if (truth && !close(truth->weight, result.summary.weight)) fail("tree is not of minimum weight");
      } else if (points.size() <= kBruteForceMaxPoints && truth) {
        fail("an alpha-ST exists but the result claims none");
      }
    } else {
      fail("unknown result kind '" + result.kind + "'");
    }
  } catch (const Error& e) {
    fail(e.what());
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace bast
