#include "bast/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <queue>
#include <string>

#include "bast/error.hpp"

namespace bast {

bool is_alpha_st(std::span<const Point> points, std::span<const Edge> edges, double alpha) {
  const std::size_t n = points.size();
  if (!is_spanning_tree(n, edges)) return false;
  std::vector<std::vector<Point>> nbrs(n);
  for (const auto& e : edges) {
    nbrs[e.u].push_back(points[e.v]);
    nbrs[e.v].push_back(points[e.u]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (nbrs[v].size() >= 2 && angular_spread(points[v], nbrs[v]) > alpha + kAngleTolerance) return false;
  }
  return true;
}

namespace {

// Calls f(edges) for every labelled tree on n >= 2 vertices.
template <typename F>
void for_each_tree(std::size_t n, F&& f) {
  std::vector<Edge> edges(n - 1);
  if (n == 2) {
    edges[0] = Edge(0, 1);
    f(edges);
    return;
  }
  std::vector<std::size_t> code(n - 2, 0);
  std::vector<int> degree(n);
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (std::size_t c : code) ++degree[c];
    std::size_t k = 0;
    for (std::size_t c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges[k++] = Edge(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    std::size_t a = n, b = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) (a == n ? a : b) = v;
    }
    edges[k] = Edge(a, b);
    f(edges);

    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
    if (pos == code.size()) break;
  }
}

void check_enumerable(std::span<const Point> points) {
  require_valid_points(points);
  if (points.empty()) throw Error(ErrorCode::kTooFewPoints, "empty point set");
  if (points.size() > kBruteForceMaxPoints) {
    throw Error(ErrorCode::kTooManyPoints, "enumeration is limited to " + std::to_string(kBruteForceMaxPoints) +
                                               " points, got " + std::to_string(points.size()));
  }
}

}  // namespace

std::optional<SpanningTree> brute_force_alpha_mst(std::span<const Point> points, double alpha) {
  check_enumerable(points);
  const std::size_t n = points.size();
  if (n == 1) return SpanningTree{};

  // Directions are precomputed once; spread is then a pure angle problem.
  std::vector<std::vector<double>> dir(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> len(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      dir[i][j] = direction(points[i], points[j]).degrees();
      len[i][j] = distance(points[i], points[j]);
    }
  }

  std::optional<SpanningTree> best;
  std::vector<std::vector<double>> around(n);
  for_each_tree(n, [&](const std::vector<Edge>& edges) {
    double w = 0.0;
    for (const auto& e : edges) w += len[e.u][e.v];
    if (best && w >= best->weight) return;
    for (auto& a : around) a.clear();
    for (const auto& e : edges) {
      around[e.u].push_back(dir[e.u][e.v]);
      around[e.v].push_back(dir[e.v][e.u]);
    }
    for (auto& a : around) {
      if (a.size() >= 2 && angular_spread(a) > alpha + kAngleTolerance) return;
    }
    best = SpanningTree{edges, w};
  });
  if (best) std::sort(best->edges.begin(), best->edges.end());
  return best;
}

double brute_force_mst_weight(std::span<const Point> points) {
  check_enumerable(points);
  const std::size_t n = points.size();
  if (n == 1) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for_each_tree(n, [&](const std::vector<Edge>& edges) { best = std::min(best, tree_weight(points, edges)); });
  return best;
}

namespace {

// reach[mask] has bit v set iff some simple path covers exactly `mask` and
// ends at v (starting anywhere in mask, or at vertex 0 when `from_zero`).
std::vector<std::uint32_t> path_table(const CommGraph& g, bool from_zero) {
  const std::size_t n = g.size();
  if (n > kHamiltonMaxVertices) {
    throw Error(ErrorCode::kTooManyPoints, "Hamiltonicity check is limited to " +
                                               std::to_string(kHamiltonMaxVertices) + " vertices, got " +
                                               std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!from_zero || v == 0) reach[std::size_t{1} << v] = 1u << v;
  }
  for (std::size_t mask = 1; mask < reach.size(); ++mask) {
    const std::uint32_t ends = reach[mask];
    if (!ends) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(ends >> v & 1u)) continue;
      std::uint32_t next = adj[v] & ~static_cast<std::uint32_t>(mask);
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (std::size_t{1} << w)] |= 1u << w;
      }
    }
  }
  return reach;
}

}  // namespace

bool hamiltonian_path_exists(const CommGraph& g) {
  if (g.size() == 0) return false;
  return path_table(g, false).back() != 0;
}

bool hamiltonian_cycle_exists(const CommGraph& g) {
  const std::size_t n = g.size();
  if (n < 3) return false;
  const std::uint32_t ends = path_table(g, true).back();
  for (std::size_t w : g.neighbors(0)) {
    if (ends >> w & 1u) return true;
  }
  return false;
}

CommGraph GridGraph::graph() const {
  CommGraph g(vertices.size());
  for (const auto& e : edges) g.add_edge(e.u, e.v, distance(vertices[e.u], vertices[e.v]));
  return g;
}

Point hex_lattice_point(LatticeCoord c) {
  return {c.i + 0.5 * c.j, c.j * (std::numbers::sqrt3 / 2.0)};
}

namespace {

int hex_residue(LatticeCoord c) { return (((c.i - c.j) % 3) + 3) % 3; }

// Tiling neighbours of a hexagon-tiling vertex.
std::array<LatticeCoord, 3> hex_neighbors(LatticeCoord c) {
  if (hex_residue(c) == 1) return {{{c.i + 1, c.j}, {c.i - 1, c.j + 1}, {c.i, c.j - 1}}};
  return {{{c.i, c.j + 1}, {c.i - 1, c.j}, {c.i + 1, c.j - 1}}};
}

GridGraph make_grid(GridKind kind, std::vector<LatticeCoord> cells) {
  GridGraph g;
  g.kind = kind;
  std::map<LatticeCoord, std::size_t> where;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!where.emplace(cells[k], k).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lattice cell (" + std::to_string(cells[k].i) + "," + std::to_string(cells[k].j) + ") repeats");
    }
    if (kind == GridKind::kHexagonal && !is_hex_vertex(cells[k])) {
      throw Error(ErrorCode::kInvalidArgument, "lattice cell (" + std::to_string(cells[k].i) + "," +
                                                   std::to_string(cells[k].j) + ") is a hexagon centre");
    }
    g.vertices.push_back(kind == GridKind::kSquare ? Point{double(cells[k].i), double(cells[k].j)}
                                                   : hex_lattice_point(cells[k]));
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<LatticeCoord> nbrs;
    if (kind == GridKind::kSquare) {
      nbrs = {{cells[k].i + 1, cells[k].j}, {cells[k].i, cells[k].j + 1}};
    } else {
      const auto h = hex_neighbors(cells[k]);
      nbrs.assign(h.begin(), h.end());
    }
    for (const auto& c : nbrs) {
      auto it = where.find(c);
      if (it != where.end() && it->second != k) {
        const Edge e(k, it->second);
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) g.edges.push_back(e);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.lattice = std::move(cells);
  return g;
}

}  // namespace

bool is_hex_vertex(LatticeCoord c) { return hex_residue(c) != 0; }

GridGraph square_grid(std::vector<LatticeCoord> cells) { return make_grid(GridKind::kSquare, std::move(cells)); }

GridGraph hex_grid(std::vector<LatticeCoord> cells) { return make_grid(GridKind::kHexagonal, std::move(cells)); }

std::vector<LatticeCoord> hex_cell_vertices(LatticeCoord center) {
  if (hex_residue(center) != 0) throw Error(ErrorCode::kInvalidArgument, "not a hexagon centre");
  static constexpr std::array<std::array<int, 2>, 6> kSteps{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  std::vector<LatticeCoord> out;
  for (const auto& s : kSteps) out.push_back({center.i + s[0], center.j + s[1]});
  return out;
}

ReductionInstance square_grid_reduction(const GridGraph& g) {
  if (g.kind != GridKind::kSquare) throw Error(ErrorCode::kNotBipartiteLayout, "expected a square grid");
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kTooFewPoints, "empty grid");
  const CommGraph graph = g.graph();

  std::map<LatticeCoord, std::size_t> where;
  for (std::size_t k = 0; k < n; ++k) where.emplace(g.lattice[k], k);

  // Lattice parity is a proper 2-colouring; confirm it on every edge.
  auto parity = [&](std::size_t v) { return ((g.lattice[v].i + g.lattice[v].j) % 2 + 2) % 2; };
  for (const auto& e : g.edges) {
    if (parity(e.u) == parity(e.v)) throw Error(ErrorCode::kNotBipartiteLayout, "edge joins same-colour vertices");
  }

  ReductionInstance out;
  out.points = g.vertices;
  static constexpr std::array<std::array<int, 2>, 4> kOrder{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.neighbors(v).size() > 3) {
      throw Error(ErrorCode::kDegreeTooHigh, "vertex " + std::to_string(v) + " has degree 4");
    }
    const bool black = parity(v) == parity(0);
    (black ? out.black : out.white) += 1;
    const double offset = black ? 0.25 : 0.2;
    for (const auto& s : kOrder) {
      if (where.count({g.lattice[v].i + s[0], g.lattice[v].j + s[1]})) continue;
      out.points.push_back({g.vertices[v].x + offset * s[0], g.vertices[v].y + offset * s[1]});
      break;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Point& q = out.points[n + v];
    for (std::size_t k = 0; k < out.points.size(); ++k) {
      if (k == v || k == n + v) continue;
      if (distance(q, out.points[k]) <= 1.0 + length_slack(1.0)) {
        throw Error(ErrorCode::kInvariantViolation, "satellite of vertex " + std::to_string(v) + " lies within 1 of point " +
                                                        std::to_string(k));
      }
    }
  }
  out.target_weight = static_cast<double>(n - 1) + out.black / 4.0 + out.white / 5.0;
  return out;
}

namespace {

// Unit pairs between `added` and everything else, plus among `added`.
std::vector<std::pair<LatticeCoord, LatticeCoord>> new_pairs(const std::vector<LatticeCoord>& base,
                                                             const std::vector<LatticeCoord>& added) {
  std::vector<std::pair<LatticeCoord, LatticeCoord>> out;
  std::vector<LatticeCoord> all = base;
  for (const auto& a : added) {
    for (const auto& b : all) {
      const auto h = hex_neighbors(a);
      if (std::find(h.begin(), h.end(), b) != h.end()) out.emplace_back(std::min(a, b), std::max(a, b));
    }
    all.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool occupied(const std::vector<LatticeCoord>& cells, LatticeCoord c) {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

}  // namespace

GridGraph hex_grid_reduction(const GridGraph& g) {
  if (g.kind != GridKind::kHexagonal) throw Error(ErrorCode::kInvalidArgument, "expected a hexagonal grid");
  if (g.size() == 0) return g;
  std::size_t u = 0;
  for (std::size_t k = 1; k < g.size(); ++k) {
    const auto& c = g.lattice[k];
    const auto& b = g.lattice[u];
    if (c.j > b.j || (c.j == b.j && c.i < b.i)) u = k;
  }
  const LatticeCoord cu = g.lattice[u];
  std::size_t deg = 0;
  for (const auto& e : g.edges) deg += (e.u == u || e.v == u) ? 1 : 0;

  auto extended = [&](const std::vector<LatticeCoord>& added) {
    auto cells = g.lattice;
    cells.insert(cells.end(), added.begin(), added.end());
    return hex_grid(std::move(cells));
  };
  auto sorted_pairs = [](std::vector<std::pair<LatticeCoord, LatticeCoord>> p) {
    for (auto& [a, b] : p) {
      if (b < a) std::swap(a, b);
    }
    std::sort(p.begin(), p.end());
    return p;
  };

  if (deg == 0) return g;
  if (deg == 2) {
    // u is then a residue-1 vertex whose horizontal neighbour v is present.
    const LatticeCoord cv{cu.i + 1, cu.j};
    if (hex_residue(cu) != 1 || !occupied(g.lattice, cv)) {
      throw Error(ErrorCode::kInvariantViolation, "topmost vertex of degree 2 lacks a horizontal edge");
    }
    const LatticeCoord s{cu.i - 1, cu.j + 1};
    const LatticeCoord t{cv.i, cv.j + 1};
    if (new_pairs(g.lattice, {s, t}) != sorted_pairs({{s, cu}, {t, cv}})) {
      throw Error(ErrorCode::kInvariantViolation, "added points form unexpected edges");
    }
    return extended({s, t});
  }
  // Two new leaves s, t sharing a new neighbour w rule out a Hamiltonian
  // path. Attach the fork at u if the tiling leaves room, otherwise at the
  // next vertex in (highest, leftmost) order.
  auto fork_at = [&](LatticeCoord anchor) -> std::optional<std::vector<LatticeCoord>> {
    for (const auto& w : hex_neighbors(anchor)) {
      if (occupied(g.lattice, w)) continue;
      std::vector<LatticeCoord> st;
      for (const auto& x : hex_neighbors(w)) {
        if (!(x == anchor)) st.push_back(x);
      }
      if (occupied(g.lattice, st[0]) || occupied(g.lattice, st[1])) continue;
      if (new_pairs(g.lattice, {w, st[0], st[1]}) != sorted_pairs({{st[0], w}, {st[1], w}, {anchor, w}})) continue;
      return std::vector<LatticeCoord>{st[0], st[1], w};
    }
    return std::nullopt;
  };
  if (auto added = fork_at(cu)) return extended(*added);
  auto order = g.lattice;
  std::sort(order.begin(), order.end(), [](const LatticeCoord& a, const LatticeCoord& b) {
    return a.j != b.j ? a.j > b.j : a.i < b.i;
  });
  for (const auto& c : order) {
    if (auto added = fork_at(c)) return extended(*added);
  }
  // No room for a fork anywhere: two pendant leaves at other vertices give,
  // with u, three leaves, which also rules out a Hamiltonian path.
  std::vector<LatticeCoord> leaves;
  std::vector<std::pair<LatticeCoord, LatticeCoord>> expected;
  for (const auto& c : order) {
    if (c == cu || leaves.size() == 2) continue;
    for (const auto& w : hex_neighbors(c)) {
      if (occupied(g.lattice, w) || std::find(leaves.begin(), leaves.end(), w) != leaves.end()) continue;
      auto trial = leaves;
      trial.push_back(w);
      auto trial_expected = expected;
      trial_expected.push_back({c, w});
      if (new_pairs(g.lattice, trial) != sorted_pairs(trial_expected)) continue;
      leaves = std::move(trial);
      expected = std::move(trial_expected);
      break;
    }
  }
  if (leaves.size() == 2) return extended(leaves);
  throw Error(ErrorCode::kReductionUndefined, "no free placement of new leaves next to any vertex");
}

}  // namespace bast
