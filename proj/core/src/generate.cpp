#include "bast/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bast/error.hpp"
#include "bast/graph.hpp"
#include "bast/oracle.hpp"

namespace bast {

PointSet uniform_square(std::size_t n, double side, Rng& rng) {
  PointSet out(n);
  for (auto& p : out) {
    p.x = rng.uniform(0.0, side);
    p.y = rng.uniform(0.0, side);
  }
  return out;
}

PointSet connected_udg(std::size_t n, double side, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    PointSet pts = uniform_square(n, side, rng);
    if (is_connected(unit_disk_graph(pts))) return pts;
  }
  throw Error(ErrorCode::kInvalidArgument, "no connected unit disk graph after 100000 samples");
}

PointSet clustered(std::size_t n, std::size_t clusters, double spread, double side, Rng& rng) {
  if (clusters == 0) throw Error(ErrorCode::kInvalidArgument, "clustered needs at least one cluster");
  PointSet centres = uniform_square(clusters, side, rng);
  PointSet out;
  for (std::size_t k = 0; k < n; ++k) {
    const Point& c = centres[rng.below(clusters)];
    const double r = spread * std::sqrt(rng.uniform());
    const double t = 2.0 * std::numbers::pi * rng.uniform();
    out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return out;
}

PointSet collinear(std::size_t n, double gap) {
  PointSet out;
  for (std::size_t k = 0; k < n; ++k) out.push_back({gap * static_cast<double>(k), 0.0});
  return out;
}

PointSet equilateral() { return {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::numbers::sqrt3 / 2.0}}; }

PointSet equilateral_center() {
  PointSet out = equilateral();
  out.push_back({0.5, std::numbers::sqrt3 / 6.0});
  return out;
}

namespace {

// Spine along y = 0 with teeth rising from every other spine vertex.
GridGraph comb(int width, int height) {
  if (width < 1 || height < 1) throw Error(ErrorCode::kInvalidArgument, "comb needs width, height >= 1");
  std::vector<LatticeCoord> cells;
  for (int x = 0; x < width; ++x) cells.push_back({x, 0});
  for (int x = 0; x < width; x += 2) {
    for (int y = 1; y < height; ++y) cells.push_back({x, y});
  }
  return square_grid(std::move(cells));
}

// Vertical stack of hexagons sharing horizontal edges.
GridGraph hex_strip(int rows) {
  if (rows < 1) throw Error(ErrorCode::kInvalidArgument, "hex strip needs rows >= 1");
  std::vector<LatticeCoord> cells;
  for (int r = 0; r < rows; ++r) {
    for (const auto& c : hex_cell_vertices({-r, 2 * r})) {
      if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
    }
  }
  return hex_grid(std::move(cells));
}

}  // namespace

std::vector<std::string> generator_names() {
  return {"uniform-square", "connected-udg",      "clustered",     "collinear",
          "equilateral",    "equilateral-center", "square-grid-reduction", "hex-grid"};
}

GeneratedInstance generate(const std::string& name, const GeneratorParams& params, std::uint64_t seed) {
  GeneratedInstance out;
  out.generator = name;
  out.seed = seed;
  Rng rng(seed);
  const auto n = static_cast<double>(params.n);
  if (name == "uniform-square") {
    out.points = uniform_square(params.n, params.side, rng);
    out.meta = {{"n", n}, {"side", params.side}};
  } else if (name == "connected-udg") {
    out.points = connected_udg(params.n, params.side, rng);
    out.meta = {{"n", n}, {"side", params.side}};
  } else if (name == "clustered") {
    out.points = clustered(params.n, params.clusters, params.spread, params.side, rng);
    out.meta = {{"n", n}, {"clusters", static_cast<double>(params.clusters)}, {"spread", params.spread},
                {"side", params.side}};
  } else if (name == "collinear") {
    out.points = collinear(params.n, params.gap);
    out.meta = {{"n", n}, {"gap", params.gap}};
  } else if (name == "equilateral") {
    out.points = equilateral();
  } else if (name == "equilateral-center") {
    out.points = equilateral_center();
  } else if (name == "square-grid-reduction") {
    const auto inst = square_grid_reduction(comb(params.width, params.height));
    out.points = inst.points;
    out.meta = {{"width", params.width},
                {"height", params.height},
                {"target_weight", inst.target_weight},
                {"black", static_cast<double>(inst.black)},
                {"white", static_cast<double>(inst.white)}};
  } else if (name == "hex-grid") {
    out.points = hex_strip(params.rows).vertices;
    out.meta = {{"rows", params.rows}};
  } else {
    throw Error(ErrorCode::kUnknownGenerator, "unknown generator '" + name + "'");
  }
  return out;
}

}  // namespace bast
