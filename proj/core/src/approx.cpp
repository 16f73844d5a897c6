#include "bast/approx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "bast/error.hpp"
#include "bast/gadget.hpp"

namespace bast {

TourPartition partition_tour(const Tour& tour, std::size_t group_size) {
  const std::size_t n = tour.size();
  if (group_size == 0) throw Error(ErrorCode::kInvalidArgument, "group size must be positive");
  if (n < group_size) {
    throw Error(ErrorCode::kTooFewPoints, "tour of " + std::to_string(n) + " points is shorter than one group of " +
                                              std::to_string(group_size));
  }
  TourPartition out;
  out.group_size = group_size;
  out.class_weights.assign(group_size, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.class_weights[i % group_size] += tour.edge_lengths[i];
  out.connecting_class = static_cast<std::size_t>(
      std::max_element(out.class_weights.begin(), out.class_weights.end()) - out.class_weights.begin());

  // Edge e_j ends at position j+1: the first group starts right after it.
  const std::size_t start = (out.connecting_class + 1) % n;
  out.full_groups = n / group_size;
  std::size_t pos = 0;
  for (std::size_t g = 0; g < out.full_groups; ++g) {
    std::vector<std::size_t> group;
    for (std::size_t k = 0; k < group_size; ++k, ++pos) group.push_back(tour.order[(start + pos) % n]);
    out.groups.push_back(std::move(group));
  }
  if (pos < n) {
    std::vector<std::size_t> rest;
    for (; pos < n; ++pos) rest.push_back(tour.order[(start + pos) % n]);
    out.groups.push_back(std::move(rest));
  }
  return out;
}

std::optional<double> ratio_bound(double alpha) {
  if (alpha == 180.0) return 2.0;
  if (alpha == 120.0) return 6.0;
  if (alpha == 90.0) return 16.0;
  return std::nullopt;
}

std::optional<double> charging_bound(double alpha) {
  if (alpha == 180.0) return 1.0;
  if (alpha == 120.0) return 3.0;
  if (alpha == 90.0) return 8.0;
  return std::nullopt;
}

bool bounds_enforced(double alpha, std::size_t n) {
  if (alpha == 180.0) return true;
  if (alpha == 120.0) return n % 3 == 0;
  if (alpha == 90.0) return n % 8 == 0;
  return false;
}

namespace {

struct TreeBuilder {
  std::span<const Point> points;
  std::vector<Edge> edges;

  void add(std::size_t u, std::size_t v) { edges.emplace_back(u, v); }
};

std::vector<std::size_t> tree_neighbors(std::size_t v, std::span<const Edge> edges) {
  std::vector<std::size_t> out;
  for (const auto& e : edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  return out;
}

// Wedge for a point outside every full group: it faces the nearest member
// of `anchor` whose wedge already covers it, which makes the pair an edge.
void attach_leftovers(std::span<const Point> points, std::vector<Wedge>& wedges, TreeBuilder& tree,
                      std::span<const std::size_t> anchor, std::span<const std::size_t> leftovers, double aperture) {
  for (std::size_t p : leftovers) {
    std::optional<std::size_t> best;
    for (std::size_t x : anchor) {
      if (!wedge_contains(wedges[x], points[p])) continue;
      if (!best || distance(points[p], points[x]) < distance(points[p], points[*best])) best = x;
    }
    if (!best) {
      throw Error(ErrorCode::kInvariantViolation,
                  "no anchor wedge covers leftover point " + std::to_string(p) + "; gadget coverage failed");
    }
    wedges[p] = make_wedge(points[p], direction(points[p], points[*best]), aperture);
    tree.add(p, *best);
  }
}

SpanningTree finish_tree(std::span<const Point> points, std::vector<Edge> edges) {
  SpanningTree t;
  t.weight = tree_weight(points, edges);
  t.edges = std::move(edges);
  return t;
}

void enforce(std::span<const Point> points, const AlphaST& st) {
  const AlphaReport report = verify_alpha_st(points, st);
  if (!report.spanning) throw Error(ErrorCode::kInvariantViolation, "builder output is not a spanning tree");
  if (!report.spread_violations.empty()) {
    throw Error(ErrorCode::kInvariantViolation,
                "angular spread exceeds alpha at vertex " + std::to_string(report.spread_violations.front()));
  }
  if (!report.witnesses_ok) throw Error(ErrorCode::kInvariantViolation, "tree edge missing from the induced graph");
  if (!report.ratio_ok || !report.charging_ok) {
    throw Error(ErrorCode::kInvariantViolation, "weight bound violated");
  }
}

// Minimum spanning tree of the induced graph on `members` (Kruskal).
std::vector<Edge> induced_mst(std::span<const Point> points, std::span<const Wedge> wedges,
                              std::span<const std::size_t> members) {
  const CommGraph g = induced_subgraph(points, wedges, members);
  auto edges = g.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const WeightedEdge& l, const WeightedEdge& r) { return l.length < r.length; });
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> out;
  for (const auto& e : edges) {
    const auto a = find(e.edge.u), b = find(e.edge.v);
    if (a == b) continue;
    parent[a] = b;
    out.push_back(e.edge);
  }
  if (out.size() + 1 != members.size()) {
    throw Error(ErrorCode::kInvariantViolation, "gadget induced graph is disconnected");
  }
  return out;
}

std::vector<std::size_t> concat(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::vector<std::size_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

AlphaST facing_pair(std::span<const Point> points, double alpha) {
  AlphaST st;
  st.alpha = alpha;
  const auto w = orient_pair(points[0], points[1], alpha);
  st.wedges = {w[0], w[1]};
  st.tree = finish_tree(points, {Edge(0, 1)});
  st.mst_weight = st.tree.weight;
  st.tour_weight = 2.0 * st.tree.weight;
  return st;
}

void require_builder_input(std::span<const Point> points) {
  require_valid_points(points);
  if (points.size() < 2) throw Error(ErrorCode::kTooFewPoints, "builders need at least two points");
}

}  // namespace

AlphaST build_pi_st(std::span<const Point> points) {
  require_builder_input(points);
  const std::size_t n = points.size();
  const Tour tour = tsp_tour(points);

  std::size_t heaviest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (tour.edge_lengths[i] > tour.edge_lengths[heaviest]) heaviest = i;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != heaviest) edges.push_back(tour.edge(i));
  }
  if (n == 2) edges.resize(1);

  AlphaST st;
  st.alpha = 180.0;
  st.tree = finish_tree(points, std::move(edges));
  st.tour_weight = tour.weight;
  st.mst_weight = euclidean_mst(points).weight;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Point> nbrs;
    for (std::size_t u : tree_neighbors(v, st.tree.edges)) nbrs.push_back(points[u]);
    st.wedges.push_back(witness_wedge(points[v], nbrs, st.alpha));
  }
  enforce(points, st);
  return st;
}

AlphaST build_two_thirds_pi_st(std::span<const Point> points) {
  require_builder_input(points);
  constexpr double kAlpha = 120.0;
  if (points.size() == 2) {
    AlphaST st = facing_pair(points, kAlpha);
    enforce(points, st);
    return st;
  }

  const Tour tour = tsp_tour(points);
  TourPartition part = partition_tour(tour, 3);
  std::vector<Wedge> wedges(points.size());
  TreeBuilder tree{points, {}};

  for (std::size_t g = 0; g < part.full_groups; ++g) {
    const auto& grp = part.groups[g];
    const TripletOrientation o = orient_triplet({points[grp[0]], points[grp[1]], points[grp[2]]});
    for (std::size_t k = 0; k < 3; ++k) wedges[grp[k]] = o.wedges[k];
    tree.add(grp[o.a], grp[o.b]);
    tree.add(grp[o.b], grp[o.c]);
  }
  for (std::size_t g = 0; g + 1 < part.full_groups; ++g) {
    const auto& lhs = part.groups[g];
    const auto& rhs = part.groups[g + 1];
    const auto both = concat(lhs, rhs);
    const auto edge = cross_edge(induced_subgraph(points, wedges, both), lhs, rhs);
    if (!edge) {
      throw Error(ErrorCode::kTheoremViolation,
                  "consecutive triplets " + std::to_string(g) + " and " + std::to_string(g + 1) + " share no edge");
    }
    tree.add(edge->edge.u, edge->edge.v);
  }
  if (part.has_remainder()) {
    attach_leftovers(points, wedges, tree, part.groups[part.full_groups - 1], part.groups.back(), kAlpha);
  }

  AlphaST st;
  st.alpha = kAlpha;
  st.tree = finish_tree(points, std::move(tree.edges));
  st.wedges = std::move(wedges);
  st.tour_weight = tour.weight;
  st.mst_weight = euclidean_mst(points).weight;
  st.partition = std::move(part);
  enforce(points, st);
  return st;
}

namespace {

// Three points with 90-degree wedges: a path through the vertex of the
// smallest triangle angle (at most 60 degrees).
AlphaST half_pi_triangle(std::span<const Point> points) {
  const std::array<Point, 3> s{points[0], points[1], points[2]};
  const auto angles = triangle_angles(s);
  const std::size_t mid = static_cast<std::size_t>(std::min_element(angles.begin(), angles.end()) - angles.begin());
  AlphaST st;
  st.alpha = 90.0;
  std::vector<Edge> edges;
  std::vector<Point> nbrs;
  st.wedges.resize(3);
  for (std::size_t k = 0; k < 3; ++k) {
    if (k == mid) continue;
    edges.emplace_back(mid, k);
    nbrs.push_back(points[k]);
    st.wedges[k] = make_wedge(points[k], direction(points[k], points[mid]), st.alpha);
  }
  st.wedges[mid] = witness_wedge(points[mid], nbrs, st.alpha);
  st.tree = finish_tree(points, std::move(edges));
  return st;
}

}  // namespace

AlphaST build_half_pi_st(std::span<const Point> points) {
  require_builder_input(points);
  constexpr double kAlpha = 90.0;
  const std::size_t n = points.size();
  if (n == 2) {
    AlphaST st = facing_pair(points, kAlpha);
    enforce(points, st);
    return st;
  }
  const Tour tour = tsp_tour(points);
  if (n == 3) {
    AlphaST st = half_pi_triangle(points);
    st.tour_weight = tour.weight;
    st.mst_weight = euclidean_mst(points).weight;
    enforce(points, st);
    return st;
  }

  std::vector<Wedge> wedges(n);
  TreeBuilder tree{points, {}};

  auto orient_four = [&](std::span<const std::size_t> quad) {
    const QuadrupletOrientation o =
        orient_quadruplet({points[quad[0]], points[quad[1]], points[quad[2]], points[quad[3]]});
    for (std::size_t k = 0; k < 4; ++k) wedges[quad[k]] = o.wedges[k];
    for (const auto& e : induced_mst(points, wedges, quad)) tree.add(e.u, e.v);
  };

  std::optional<TourPartition> part;
  if (n < 8) {
    // No full section: the first four tour points form the only gadget.
    const std::vector<std::size_t> quad(tour.order.begin(), tour.order.begin() + 4);
    const std::vector<std::size_t> rest(tour.order.begin() + 4, tour.order.end());
    orient_four(quad);
    attach_leftovers(points, wedges, tree, quad, rest, kAlpha);
  } else {
    part = partition_tour(tour, 8);
    for (std::size_t g = 0; g < part->full_groups; ++g) {
      auto section = part->groups[g];
      std::sort(section.begin(), section.end(), [&](std::size_t l, std::size_t r) {
        if (points[l].x != points[r].x) return points[l].x < points[r].x;
        if (points[l].y != points[r].y) return points[l].y < points[r].y;
        return l < r;
      });
      const std::span<const std::size_t> left(section.data(), 4);
      const std::span<const std::size_t> right(section.data() + 4, 4);
      orient_four(left);
      orient_four(right);
      const auto q_edge = cross_edge(induced_subgraph(points, wedges, section), left, right);
      if (!q_edge) {
        throw Error(ErrorCode::kSeparationConnectivityViolation,
                    "quadruplets of section " + std::to_string(g) + " share no edge");
      }
      tree.add(q_edge->edge.u, q_edge->edge.v);
    }
    for (std::size_t g = 0; g + 1 < part->full_groups; ++g) {
      const auto& lhs = part->groups[g];
      const auto& rhs = part->groups[g + 1];
      const auto both = concat(lhs, rhs);
      const auto s_edge = cross_edge(induced_subgraph(points, wedges, both), lhs, rhs);
      if (!s_edge) {
        throw Error(ErrorCode::kSeparationConnectivityViolation,
                    "sections " + std::to_string(g) + " and " + std::to_string(g + 1) + " share no edge");
      }
      tree.add(s_edge->edge.u, s_edge->edge.v);
    }
    if (part->has_remainder()) {
      attach_leftovers(points, wedges, tree, part->groups[part->full_groups - 1], part->groups.back(), kAlpha);
    }
  }

  AlphaST st;
  st.alpha = kAlpha;
  st.tree = finish_tree(points, std::move(tree.edges));
  st.wedges = std::move(wedges);
  st.tour_weight = tour.weight;
  st.mst_weight = euclidean_mst(points).weight;
  st.partition = std::move(part);
  enforce(points, st);
  return st;
}

AlphaST build_alpha_st(std::span<const Point> points, double alpha) {
  if (alpha == 180.0) return build_pi_st(points);
  if (alpha == 120.0) return build_two_thirds_pi_st(points);
  if (alpha == 90.0) return build_half_pi_st(points);
  throw Error(ErrorCode::kInvalidArgument, "builders exist for alpha in {90, 120, 180} only");
}

AlphaReport verify_alpha_st(std::span<const Point> points, const AlphaST& result) {
  AlphaReport r;
  const std::size_t n = points.size();
  const auto& edges = result.tree.edges;
  r.spanning = is_spanning_tree(n, edges);

  std::vector<std::vector<Point>> nbrs(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) continue;
    nbrs[e.u].push_back(points[e.v]);
    nbrs[e.v].push_back(points[e.u]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const double spread = nbrs[v].size() < 2 ? 0.0 : angular_spread(points[v], nbrs[v]);
    if (!r.worst_vertex || spread > r.max_spread) {
      r.max_spread = spread;
      r.worst_vertex = v;
    }
    if (spread > result.alpha + kAngleTolerance) r.spread_violations.push_back(v);
  }

  r.witnesses_ok = result.wedges.size() == n;
  if (r.witnesses_ok) {
    for (std::size_t v = 0; v < n; ++v) {
      const Wedge& w = result.wedges[v];
      if (!coincident(w.apex, points[v]) || std::abs(w.aperture - result.alpha) > kAngleTolerance) {
        r.witnesses_ok = false;
      }
    }
  }
  if (r.witnesses_ok) {
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) continue;
      if (!wedge_contains(result.wedges[e.u], points[e.v]) || !wedge_contains(result.wedges[e.v], points[e.u])) {
        r.unsupported_edges.push_back(e);
      }
    }
    r.witnesses_ok = r.unsupported_edges.empty();
  }

  r.weight = tree_weight(points, edges);
  r.mst_weight = n == 0 ? 0.0 : euclidean_mst(points).weight;
  r.ratio = r.mst_weight > 0.0 ? r.weight / r.mst_weight : 1.0;
  r.bound = ratio_bound(result.alpha);
  r.bound_enforced = r.bound.has_value() && bounds_enforced(result.alpha, n);
  if (r.bound_enforced) {
    r.ratio_ok = r.weight <= *r.bound * r.mst_weight * (1.0 + 1e-9) + 1e-12;
    if (result.tour_weight > 0.0) {
      r.charging_ok = r.weight <= *charging_bound(result.alpha) * result.tour_weight * (1.0 + 1e-9) + 1e-12;
    }
  }
  r.pass = r.spanning && r.spread_violations.empty() && r.witnesses_ok && r.ratio_ok && r.charging_ok;
  return r;
}

}  // namespace bast
