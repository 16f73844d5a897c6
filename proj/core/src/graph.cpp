#include "bast/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "bast/error.hpp"
#include "spatial_grid.hpp"

namespace bast {

void CommGraph::add_edge(std::size_t u, std::size_t v, double length) {
  if (u == v || has_edge(u, v)) return;
  auto insert_sorted = [&](std::size_t from, std::size_t to) {
    auto& list = adjacency_[from];
    const auto pos = std::lower_bound(list.begin(), list.end(), to) - list.begin();
    list.insert(list.begin() + pos, to);
    lengths_[from].insert(lengths_[from].begin() + pos, length);
  };
  insert_sorted(u, v);
  insert_sorted(v, u);
  edges_.push_back({Edge(u, v), length});
}

bool CommGraph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<WeightedEdge> CommGraph::edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end(), [](const WeightedEdge& l, const WeightedEdge& r) { return l.edge < r.edge; });
  return out;
}

std::optional<double> CommGraph::edge_length(std::size_t u, std::size_t v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return std::nullopt;
  const auto& list = adjacency_[u];
  const auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return std::nullopt;
  return lengths_[u][static_cast<std::size_t>(it - list.begin())];
}

namespace {

void check_wedges(std::span<const Point> points, std::span<const Wedge> wedges) {
  if (points.size() != wedges.size()) {
    throw Error(ErrorCode::kApexMismatch, "wedge count " + std::to_string(wedges.size()) +
                                              " differs from point count " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!coincident(points[i], wedges[i].apex)) {
      throw Error(ErrorCode::kApexMismatch, "wedge " + std::to_string(i) + " is not anchored at its point");
    }
  }
}

bool mutually_covered(std::span<const Point> points, std::span<const Wedge> wedges, std::size_t i, std::size_t j) {
  return wedge_contains(wedges[i], points[j]) && wedge_contains(wedges[j], points[i]);
}

}  // namespace

CommGraph induced_graph(std::span<const Point> points, std::span<const Wedge> wedges) {
  check_wedges(points, wedges);
  const std::size_t n = points.size();
  CommGraph g(n);
  double max_radius = 0.0;
  bool bounded = n > 0;
  for (const auto& w : wedges) {
    if (!w.radius) {
      bounded = false;
      break;
    }
    max_radius = std::max(max_radius, *w.radius);
  }
  if (bounded) {
    const detail::SpatialGrid grid(points, max_radius * (1.0 + 1e-6));
    for (std::size_t i = 0; i < n; ++i) {
      grid.for_each_near(points[i], [&](std::size_t j) {
        if (j > i && mutually_covered(points, wedges, i, j)) g.add_edge(i, j, distance(points[i], points[j]));
      });
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (mutually_covered(points, wedges, i, j)) g.add_edge(i, j, distance(points[i], points[j]));
      }
    }
  }
  return g;
}

CommGraph induced_subgraph(std::span<const Point> points, std::span<const Wedge> wedges,
                           std::span<const std::size_t> members) {
  if (points.size() != wedges.size()) check_wedges(points, wedges);
  for (std::size_t i : members) {
    if (i >= points.size()) throw Error(ErrorCode::kInvalidArgument, "member index out of range");
    if (!coincident(points[i], wedges[i].apex)) {
      throw Error(ErrorCode::kApexMismatch, "wedge " + std::to_string(i) + " is not anchored at its point");
    }
  }
  CommGraph g(points.size());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const std::size_t i = members[a], j = members[b];
      if (mutually_covered(points, wedges, i, j)) g.add_edge(i, j, distance(points[i], points[j]));
    }
  }
  return g;
}

CommGraph unit_disk_graph(std::span<const Point> points, double r) {
  CommGraph g(points.size());
  if (points.empty()) return g;
  const detail::SpatialGrid grid(points, r * (1.0 + 1e-6));
  const double limit = r + length_slack(r);
  for (std::size_t i = 0; i < points.size(); ++i) {
    grid.for_each_near(points[i], [&](std::size_t j) {
      if (j <= i) return;
      const double d = distance(points[i], points[j]);
      if (d <= limit) g.add_edge(i, j, d);
    });
  }
  return g;
}

std::vector<int> hop_distances(const CommGraph& g, std::size_t source, std::optional<int> cap) {
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (cap && dist[u] >= *cap) continue;
    for (std::size_t w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<int> hop_distance(const CommGraph& g, std::size_t u, std::size_t v, std::optional<int> cap) {
  if (u == v) return 0;
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (cap && dist[x] >= *cap) continue;
    for (std::size_t w : g.neighbors(x)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[x] + 1;
      if (w == v) return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

bool is_connected(const CommGraph& g) {
  if (g.size() <= 1) return true;
  const auto dist = hop_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool is_spanning_tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) return edges.empty();
  if (edges.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) return false;
    const auto ru = find(e.u), rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

double tree_weight(std::span<const Point> points, std::span<const Edge> edges) {
  double w = 0.0;
  for (const auto& e : edges) w += distance(points[e.u], points[e.v]);
  return w;
}

SpanningTree euclidean_mst(std::span<const Point> points) {
  require_valid_points(points);
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::kTooFewPoints, "MST of an empty point set");
  SpanningTree tree;
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> in_tree(n, false);
  key[0] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i] && (best == n || key[i] < key[best])) best = i;
    }
    in_tree[best] = true;
    if (step > 0) {
      tree.edges.emplace_back(parent[best], best);
      tree.weight += key[best];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (in_tree[i]) continue;
      const double d = distance(points[best], points[i]);
      if (d < key[i]) {
        key[i] = d;
        parent[i] = best;
      }
    }
  }
  return tree;
}

Tour tsp_tour(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorCode::kTooFewPoints, "a tour needs at least two points");
  const SpanningTree mst = euclidean_mst(points);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : mst.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  Tour tour;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (seen[u]) continue;
    seen[u] = true;
    tour.order.push_back(u);
    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it) {
      if (!seen[*it]) stack.push_back(*it);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double len = distance(points[tour.order[i]], points[tour.order[(i + 1) % n]]);
    tour.edge_lengths.push_back(len);
    tour.weight += len;
  }
  if (tour.weight > 2.0 * mst.weight * (1.0 + 1e-9) + 1e-12) {
    throw Error(ErrorCode::kInvariantViolation, "shortcut tour exceeds twice the MST weight");
  }
  return tour;
}

std::optional<WeightedEdge> cross_edge(const CommGraph& g, std::span<const std::size_t> a,
                                       std::span<const std::size_t> b) {
  std::vector<bool> in_b(g.size(), false);
  for (std::size_t v : b) in_b[v] = true;
  std::optional<WeightedEdge> best;
  std::vector<bool> in_a(g.size(), false);
  for (std::size_t v : a) in_a[v] = true;
  for (std::size_t u : a) {
    for (std::size_t v : g.neighbors(u)) {
      if (!in_b[v] || in_a[v]) continue;
      const WeightedEdge cand{Edge(u, v), *g.edge_length(u, v)};
      if (!best || cand.length < best->length || (cand.length == best->length && cand.edge < best->edge)) {
        best = cand;
      }
    }
  }
  return best;
}

}  // namespace bast
