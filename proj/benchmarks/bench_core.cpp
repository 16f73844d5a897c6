#include <benchmark/benchmark.h>

#include "bast/approx.hpp"
#include "bast/gadget.hpp"
#include "bast/generate.hpp"
#include "bast/graph.hpp"
#include "bast/spanner.hpp"

namespace {

using namespace bast;

PointSet square_points(std::size_t n) {
  Rng rng(n);
  return uniform_square(n, 1.0, rng);
}

void BM_EuclideanMst(benchmark::State& state) {
  const PointSet pts = square_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_mst(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EuclideanMst)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_OrientTriplet(benchmark::State& state) {
  Rng rng(3);
  const std::array<Point, 3> s{Point{rng.uniform(), rng.uniform()}, Point{rng.uniform(), rng.uniform()},
                               Point{rng.uniform(), rng.uniform()}};
  for (auto _ : state) benchmark::DoNotOptimize(orient_triplet(s));
}
BENCHMARK(BM_OrientTriplet);

void BM_OrientQuadruplet(benchmark::State& state) {
  Rng rng(4);
  const std::array<Point, 4> s{Point{rng.uniform(), rng.uniform()}, Point{rng.uniform(), rng.uniform()},
                               Point{rng.uniform(), rng.uniform()}, Point{rng.uniform(), rng.uniform()}};
  for (auto _ : state) benchmark::DoNotOptimize(orient_quadruplet(s));
}
BENCHMARK(BM_OrientQuadruplet);

void BM_Builder(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0));
  const PointSet pts = square_points(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(build_alpha_st(pts, alpha));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_Builder)->ArgsProduct({{180, 120, 90}, {96, 384, 1536}});

void BM_Spanner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double side = std::sqrt(static_cast<double>(n) / 8.0);
  Rng rng(n);
  PointSet pts;
  do {
    pts = uniform_square(n, side, rng);
  } while (!is_connected(unit_disk_graph(pts)));
  for (auto _ : state) benchmark::DoNotOptimize(build_spanner(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spanner)->Arg(200)->Arg(800)->Arg(3200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
