#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "bast/geom.hpp"

namespace bast::detail {

// Uniform bucket grid keyed by integer cell coordinates.
class SpatialGrid {
 public:
  SpatialGrid(std::span<const Point> points, double cell) : cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) buckets_[key(cell_of(points[i]))].push_back(i);
  }

  struct Cell {
    std::int64_t cx;
    std::int64_t cy;
  };

  Cell cell_of(const Point& p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)), static_cast<std::int64_t>(std::floor(p.y / cell_))};
  }

  // Calls f(index) for every point in the 3x3 block around p's cell.
  template <typename F>
  void for_each_near(const Point& p, F&& f) const {
    const Cell c = cell_of(p);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = buckets_.find(key({c.cx + dx, c.cy + dy}));
        if (it == buckets_.end()) continue;
        for (std::size_t i : it->second) f(i);
      }
    }
  }

  std::vector<std::size_t>* bucket(const Cell& c) {
    auto it = buckets_.find(key(c));
    return it == buckets_.end() ? nullptr : &it->second;
  }

  static std::uint64_t key(const Cell& c) {
    return (static_cast<std::uint64_t>(c.cx) << 32) ^ (static_cast<std::uint64_t>(c.cy) & 0xffffffffULL);
  }

 private:
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

}  // namespace bast::detail
