#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bast/geom.hpp"

namespace bast {

/// mt19937_64 with an explicit 53-bit double conversion, so a seed gives
/// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in {0, ..., n-1}; n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorParams {
  std::size_t n = 60;
  double side = 1.0;
  std::size_t clusters = 4;
  double spread = 0.05;
  double gap = 1.0;
  int width = 3;
  int height = 2;
  int rows = 1;
};

struct GeneratedInstance {
  PointSet points;
  std::string generator;
  std::uint64_t seed = 0;
  std::map<std::string, double> meta;  // generator parameters and derived values
};

/// Known names: uniform-square, connected-udg, clustered, collinear,
/// equilateral, equilateral-center, square-grid-reduction, hex-grid.
std::vector<std::string> generator_names();

/// Deterministic in (name, params, seed). Throws UnknownGenerator.
GeneratedInstance generate(const std::string& name, const GeneratorParams& params, std::uint64_t seed);

PointSet uniform_square(std::size_t n, double side, Rng& rng);
/// Uniform points, resampled until the unit disk graph is connected.
/// Throws InvalidArgument after 100000 attempts.
PointSet connected_udg(std::size_t n, double side, Rng& rng);
/// Centres uniform in [0,side]^2, points uniform in a disk of radius `spread`.
PointSet clustered(std::size_t n, std::size_t clusters, double spread, double side, Rng& rng);
PointSet collinear(std::size_t n, double gap);
PointSet equilateral();
PointSet equilateral_center();

}  // namespace bast
