#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "bast/geom.hpp"
#include "bast/graph.hpp"

namespace bast {

inline constexpr double kSpannerAperture = 120.0;
inline constexpr double kSpannerRadius = 7.0;
inline constexpr int kSpannerHopBound = 6;
/// Longest edge allowed between a small component and its anchor gadget.
inline constexpr double kAnchorEdgeBound = 4.0;

/// Grid of unit cells answering "some remaining point within r of q".
/// Queries return the lowest remaining index in range.
class NeighborIndex {
 public:
  explicit NeighborIndex(std::span<const Point> points, double radius = 1.0);

  std::optional<std::size_t> query(const Point& q, bool remove = false);
  void erase(std::size_t i);
  bool contains(std::size_t i) const { return alive_[i]; }
  std::size_t remaining() const { return remaining_; }

 private:
  std::int64_t cell(double v) const;
  static std::uint64_t key(std::int64_t cx, std::int64_t cy);

  std::span<const Point> points_;
  double radius_;
  std::vector<bool> alive_;
  std::size_t remaining_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

struct ComponentPartition {
  std::vector<std::vector<std::size_t>> components;
  /// Per component: for size < 3, the UDG neighbour (inside a size-3
  /// component) nearest to the component; absent for size-3 components and
  /// when the whole graph is a single small component.
  std::vector<std::optional<std::size_t>> anchor;
  std::vector<std::size_t> component_of;  // per point

  std::size_t size_of(std::size_t point) const { return components[component_of[point]].size(); }
};

/// Greedy partition of a connected UDG into connected pieces of at most
/// three points. Seeds with the lowest remaining index and grows by the
/// lowest-index point within 1 of the piece. Throws DisconnectedUDG, and
/// ClaimViolation if a small piece has a neighbour outside every triple.
ComponentPartition greedy_components(std::span<const Point> points);

/// Triples get the triplet gadget; every point of a small piece faces the
/// nearest apex of its anchor triple whose wedge covers it. All wedges get
/// radius 7. Throws PartitionInvalid for malformed partitions.
std::vector<Wedge> orient_components(std::span<const Point> points, const ComponentPartition& partition);

enum class HopCase { kSameTriple = 0, kSamePair = 1, kBothTriples = 2, kMixed = 3 };

int hop_case_bound(HopCase c);
HopCase classify_udg_edge(const ComponentPartition& partition, std::size_t p, std::size_t q);

struct HopReport {
  bool pass = false;
  int bound = 0;
  int max_hops = 0;  // over all UDG edges; -1 if some edge has no path within the cap
  std::size_t udg_edges = 0;
  std::optional<Edge> violation;
  /// Filled when a partition is supplied: max hops per HopCase, -1 if none.
  std::array<int, 4> case_max{-1, -1, -1, -1};
  bool cases_ok = true;
};

/// For every UDG edge (p,q), checks hop_distance(g, p, q) <= c.
HopReport verify_hop_spanner(const CommGraph& g, const CommGraph& udg, int c);
/// Same, also checking each UDG edge against its case bound.
HopReport verify_hop_spanner(const CommGraph& g, const CommGraph& udg, int c, const ComponentPartition& partition);

struct SpannerStats {
  double partition_ms = 0.0;
  double orient_ms = 0.0;
  double graph_ms = 0.0;
  double verify_ms = 0.0;
  std::size_t triples = 0;
  std::size_t pairs = 0;
  std::size_t singles = 0;
};

struct SpannerResult {
  ComponentPartition partition;
  std::vector<Wedge> wedges;
  CommGraph graph;
  double max_edge_length = 0.0;
  int hop_stretch = 0;
  HopReport hops;
  SpannerStats stats;
};

/// Full conversion: partition, orientation, induced graph with radius 7,
/// hop verification. Throws DisconnectedUDG, HopBoundViolation, or
/// InvariantViolation if an edge-length or connectivity check fails.
SpannerResult build_spanner(std::span<const Point> points);

}  // namespace bast
