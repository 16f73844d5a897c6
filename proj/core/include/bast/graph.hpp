#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bast/geom.hpp"

namespace bast {

/// Undirected edge with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Edge edge;
  double length = 0.0;
};

/// Symmetric communication graph over vertex indices 0..n-1.
class CommGraph {
 public:
  CommGraph() = default;
  explicit CommGraph(std::size_t n) : adjacency_(n), lengths_(n) {}

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Adds {u,v}; ignores self-loops and repeated edges.
  void add_edge(std::size_t u, std::size_t v, double length);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::span<const std::size_t> neighbors(std::size_t u) const { return adjacency_[u]; }
  /// Edges sorted lexicographically.
  std::vector<WeightedEdge> edges() const;
  std::optional<double> edge_length(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<double>> lengths_;
  std::vector<WeightedEdge> edges_;
};

struct SpanningTree {
  std::vector<Edge> edges;
  double weight = 0.0;
};

/// Cyclic visiting order. Edge e_i joins order[i] and order[(i+1) % n].
struct Tour {
  std::vector<std::size_t> order;
  std::vector<double> edge_lengths;
  double weight = 0.0;

  std::size_t size() const { return order.size(); }
  Edge edge(std::size_t i) const { return {order[i], order[(i + 1) % order.size()]}; }
};

/// Edge (u,v) iff u and v lie in each other's wedge (radii included).
/// Throws ApexMismatch when wedges do not correspond to points.
CommGraph induced_graph(std::span<const Point> points, std::span<const Wedge> wedges);

/// Induced graph restricted to the listed vertices; edges are reported with
/// original indices in a graph of size points.size(). Only member wedges
/// are checked against their points.
CommGraph induced_subgraph(std::span<const Point> points, std::span<const Wedge> wedges,
                           std::span<const std::size_t> members);

/// Edge iff |pq| <= r (closed, with relative slack).
CommGraph unit_disk_graph(std::span<const Point> points, double r = 1.0);

/// BFS hop count from u to v. With `cap`, search stops beyond cap hops.
/// Returns nullopt when v is unreachable (within the cap).
std::optional<int> hop_distance(const CommGraph& g, std::size_t u, std::size_t v,
                                std::optional<int> cap = std::nullopt);

/// Hop distances from `source` to every vertex (-1 when unreachable),
/// optionally truncated at `cap`.
std::vector<int> hop_distances(const CommGraph& g, std::size_t source, std::optional<int> cap = std::nullopt);

bool is_connected(const CommGraph& g);

/// True iff `edges` form a spanning tree on n vertices.
bool is_spanning_tree(std::size_t n, std::span<const Edge> edges);

double tree_weight(std::span<const Point> points, std::span<const Edge> edges);

/// Dense Prim from vertex 0; ties go to the lowest index.
SpanningTree euclidean_mst(std::span<const Point> points);

/// MST doubling with shortcuts: preorder walk from vertex 0, children in
/// ascending index order. Asserts weight <= 2 * wt(MST).
Tour tsp_tour(std::span<const Point> points);

/// Shortest edge of g with one endpoint in a and the other in b; ties by
/// (min endpoint, max endpoint).
std::optional<WeightedEdge> cross_edge(const CommGraph& g, std::span<const std::size_t> a,
                                       std::span<const std::size_t> b);

}  // namespace bast
