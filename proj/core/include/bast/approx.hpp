#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bast/geom.hpp"
#include "bast/graph.hpp"

namespace bast {

/// Consecutive-along-the-tour grouping. Group g occupies tour positions
/// start+g*k .. start+g*k+k-1 (cyclic), with start one past the first edge
/// of the connecting class; a trailing short group holds n mod k points.
struct TourPartition {
  std::size_t group_size = 0;
  std::vector<std::vector<std::size_t>> groups;  // point indices, tour order
  std::size_t full_groups = 0;
  std::size_t connecting_class = 0;
  std::vector<double> class_weights;

  bool has_remainder() const { return groups.size() > full_groups; }
};

/// Spanning tree with bounded angular spread plus per-point witness wedges.
struct AlphaST {
  double alpha = 0.0;
  SpanningTree tree;
  std::vector<Wedge> wedges;
  double mst_weight = 0.0;
  double tour_weight = 0.0;
  std::optional<TourPartition> partition;
};

/// Splits the tour into groups of `group_size`, choosing the heaviest
/// class E_j = {e_i : i mod k == j} (ties: lowest j) as the connecting
/// edges. Throws TooFewPoints when the tour is shorter than one group.
TourPartition partition_tour(const Tour& tour, std::size_t group_size);

inline TourPartition partition_tour3(const Tour& tour) { return partition_tour(tour, 3); }

/// Tour minus its heaviest edge; 180-degree witnesses.
AlphaST build_pi_st(std::span<const Point> points);

/// Triplet gadgets along the tour joined by shortest cross edges.
/// Throws TheoremViolation if two consecutive triplets share no edge.
AlphaST build_two_thirds_pi_st(std::span<const Point> points);

/// Sections of eight along the tour, each split into x-separated
/// quadruplet gadgets. Throws SeparationConnectivityViolation if a
/// required q- or s-connecting edge is missing.
AlphaST build_half_pi_st(std::span<const Point> points);

/// Dispatch on alpha in {90, 120, 180}; InvalidArgument otherwise.
AlphaST build_alpha_st(std::span<const Point> points, double alpha);

/// Ratio bound against the MST for the supported angles (2, 6, 16); none
/// for other angles.
std::optional<double> ratio_bound(double alpha);

/// Tour-charging multiplier for the supported angles (1, 3, 8).
std::optional<double> charging_bound(double alpha);

/// True when the ratio/charging bounds apply to n points at this alpha
/// (always for 180, 3 | n for 120, 8 | n for 90).
bool bounds_enforced(double alpha, std::size_t n);

struct AlphaReport {
  bool spanning = false;
  double max_spread = 0.0;
  std::optional<std::size_t> worst_vertex;
  std::vector<std::size_t> spread_violations;
  bool witnesses_ok = false;
  std::vector<Edge> unsupported_edges;  // tree edges missing from the induced graph
  double weight = 0.0;
  double mst_weight = 0.0;
  double ratio = 0.0;
  std::optional<double> bound;
  bool bound_enforced = false;
  bool ratio_ok = true;
  bool charging_ok = true;
  bool pass = false;
};

/// Recomputes every AlphaST invariant from scratch, including a fresh MST.
AlphaReport verify_alpha_st(std::span<const Point> points, const AlphaST& result);

}  // namespace bast
