#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bast/geom.hpp"
#include "bast/graph.hpp"

namespace bast {

inline constexpr std::size_t kBruteForceMaxPoints = 8;
inline constexpr std::size_t kHamiltonMaxVertices = 16;

/// True iff `edges` span the points and every vertex has angular spread at
/// most alpha (+1e-9 degrees).
bool is_alpha_st(std::span<const Point> points, std::span<const Edge> edges, double alpha);

/// Minimum-weight alpha-ST over all labelled spanning trees (Pruefer
/// enumeration); nullopt when none exists. Ties keep the first tree in
/// enumeration order. Throws TooManyPoints above 8 points.
std::optional<SpanningTree> brute_force_alpha_mst(std::span<const Point> points, double alpha);

/// Minimum spanning-tree weight by enumeration (any angle).
double brute_force_mst_weight(std::span<const Point> points);

/// Subset DP; throws TooManyPoints above 16 vertices. A single vertex has
/// a path; a cycle needs at least three vertices.
bool hamiltonian_path_exists(const CommGraph& g);
bool hamiltonian_cycle_exists(const CommGraph& g);

enum class GridKind { kSquare, kHexagonal };

/// Integer lattice coordinates. Square grids use them directly; hexagonal
/// grids use the triangular lattice (i + j/2, j*sqrt(3)/2), whose points
/// with (i - j) mod 3 != 0 are the vertices of the unit hexagon tiling.
struct LatticeCoord {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
};

struct GridGraph {
  GridKind kind = GridKind::kSquare;
  std::vector<LatticeCoord> lattice;
  std::vector<Point> vertices;
  std::vector<Edge> edges;  // all unit-distance pairs

  std::size_t size() const { return vertices.size(); }
  CommGraph graph() const;
};

Point hex_lattice_point(LatticeCoord c);
bool is_hex_vertex(LatticeCoord c);

/// Throws InvalidArgument on repeated cells.
GridGraph square_grid(std::vector<LatticeCoord> cells);
/// Throws InvalidArgument on repeated cells or hexagon centres.
GridGraph hex_grid(std::vector<LatticeCoord> cells);

/// The six corners of the hexagon centred at lattice point `center`
/// (requires (i - j) mod 3 == 0), counter-clockwise from angle 0.
std::vector<LatticeCoord> hex_cell_vertices(LatticeCoord center);

struct ReductionInstance {
  PointSet points;  // grid vertices first, then one satellite per vertex
  double target_weight = 0.0;
  std::size_t black = 0;
  std::size_t white = 0;
};

/// Adds a satellite q_v to every vertex, on the first absent grid edge in
/// the order E, N, W, S, at distance 1/4 (black) or 1/5 (white). Vertex 0 is
/// black. Target weight is n - 1 + black/4 + white/5. Throws DegreeTooHigh
/// for degree-4 vertices and NotBipartiteLayout for non-square input.
ReductionInstance square_grid_reduction(const GridGraph& g);

/// Adds at most three tiling vertices so that a Hamiltonian cycle in g
/// exists iff the result has a Hamiltonian path. With u the highest (then
/// leftmost) vertex: degree 0 leaves g unchanged; degree 2 adds a leaf above
/// u and above its horizontal neighbour; degree 1 adds two leaves sharing a
/// new neighbour, next to u when the tiling leaves room, otherwise next to
/// the first vertex in (highest, leftmost) order that does, otherwise two
/// pendant leaves elsewhere. Throws ReductionUndefined if none fits.
GridGraph hex_grid_reduction(const GridGraph& g);

}  // namespace bast
