#include "bast/spanner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "bast/error.hpp"
#include "bast/gadget.hpp"

namespace bast {

NeighborIndex::NeighborIndex(std::span<const Point> points, double radius)
    : points_(points), radius_(radius), alive_(points.size(), true), remaining_(points.size()) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    buckets_[key(cell(points[i].x), cell(points[i].y))].push_back(i);
  }
}

std::int64_t NeighborIndex::cell(double v) const { return static_cast<std::int64_t>(std::floor(v / radius_)); }

std::uint64_t NeighborIndex::key(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
}

std::optional<std::size_t> NeighborIndex::query(const Point& q, bool remove) {
  const std::int64_t cx = cell(q.x), cy = cell(q.y);
  const double limit = radius_ + length_slack(radius_);
  std::optional<std::size_t> best;
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      auto it = buckets_.find(key(cx + dx, cy + dy));
      if (it == buckets_.end()) continue;
      for (std::size_t i : it->second) {
        if ((!best || i < *best) && distance(q, points_[i]) <= limit) best = i;
      }
    }
  }
  if (best && remove) erase(*best);
  return best;
}

void NeighborIndex::erase(std::size_t i) {
  if (!alive_[i]) return;
  auto& bucket = buckets_[key(cell(points_[i].x), cell(points_[i].y))];
  bucket.erase(std::find(bucket.begin(), bucket.end(), i));
  alive_[i] = false;
  --remaining_;
}

namespace {

void check_claim(const ComponentPartition& part, const CommGraph& udg) {
  for (std::size_t c = 0; c < part.components.size(); ++c) {
    if (part.components[c].size() == 3) continue;
    for (std::size_t p : part.components[c]) {
      for (std::size_t q : udg.neighbors(p)) {
        if (part.component_of[q] != c && part.size_of(q) != 3) {
          throw Error(ErrorCode::kClaimViolation, "point " + std::to_string(p) + " of a component of size " +
                                                      std::to_string(part.components[c].size()) +
                                                      " neighbours point " + std::to_string(q) +
                                                      " outside every triple");
        }
      }
    }
  }
}

}  // namespace

ComponentPartition greedy_components(std::span<const Point> points) {
  require_valid_points(points);
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::kTooFewPoints, "empty point set");
  const CommGraph udg = unit_disk_graph(points);
  if (!is_connected(udg)) throw Error(ErrorCode::kDisconnectedUDG, "unit disk graph is not connected");

  ComponentPartition part;
  part.component_of.assign(n, 0);
  NeighborIndex index(points);
  std::size_t next_seed = 0;
  while (index.remaining() > 0) {
    while (!index.contains(next_seed)) ++next_seed;
    std::vector<std::size_t> comp{next_seed};
    index.erase(next_seed);
    while (comp.size() < 3) {
      std::optional<std::size_t> pick;
      for (std::size_t m : comp) {
        const auto cand = index.query(points[m]);
        if (cand && (!pick || *cand < *pick)) pick = cand;
      }
      if (!pick) break;
      index.erase(*pick);
      comp.push_back(*pick);
    }
    for (std::size_t m : comp) part.component_of[m] = part.components.size();
    part.components.push_back(std::move(comp));
  }

  part.anchor.assign(part.components.size(), std::nullopt);
  if (part.components.size() == 1) return part;
  check_claim(part, udg);
  for (std::size_t c = 0; c < part.components.size(); ++c) {
    if (part.components[c].size() == 3) continue;
    double best = 0.0;
    for (std::size_t p : part.components[c]) {
      for (std::size_t q : udg.neighbors(p)) {
        if (part.component_of[q] == c) continue;
        const double d = *udg.edge_length(p, q);
        if (!part.anchor[c] || d < best || (d == best && q < *part.anchor[c])) {
          best = d;
          part.anchor[c] = q;
        }
      }
    }
  }
  return part;
}

namespace {

void check_partition(std::size_t n, const ComponentPartition& part) {
  if (part.component_of.size() != n || part.anchor.size() != part.components.size()) {
    throw Error(ErrorCode::kPartitionInvalid, "partition does not match the point count");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t c = 0; c < part.components.size(); ++c) {
    const auto& comp = part.components[c];
    if (comp.empty() || comp.size() > 3) {
      throw Error(ErrorCode::kPartitionInvalid, "component " + std::to_string(c) + " has size " +
                                                    std::to_string(comp.size()));
    }
    for (std::size_t p : comp) {
      if (p >= n || seen[p] || part.component_of[p] != c) {
        throw Error(ErrorCode::kPartitionInvalid, "point " + std::to_string(p) + " is misassigned");
      }
      seen[p] = true;
    }
    if (comp.size() < 3 && part.components.size() > 1) {
      const auto& a = part.anchor[c];
      if (!a || *a >= n || part.size_of(*a) != 3) {
        throw Error(ErrorCode::kPartitionInvalid, "component " + std::to_string(c) + " lacks a triple anchor");
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw Error(ErrorCode::kPartitionInvalid, "partition misses a point");
  }
}

}  // namespace

std::vector<Wedge> orient_components(std::span<const Point> points, const ComponentPartition& part) {
  const std::size_t n = points.size();
  check_partition(n, part);
  std::vector<Wedge> wedges(n);

  for (const auto& comp : part.components) {
    if (comp.size() != 3) continue;
    const auto o = orient_triplet({points[comp[0]], points[comp[1]], points[comp[2]]});
    for (std::size_t k = 0; k < 3; ++k) wedges[comp[k]] = o.wedges[k];
  }

  for (std::size_t c = 0; c < part.components.size(); ++c) {
    const auto& comp = part.components[c];
    if (comp.size() == 3) continue;
    if (!part.anchor[c]) {
      // The whole graph is this one component.
      if (comp.size() == 2) {
        const auto w = orient_pair(points[comp[0]], points[comp[1]], kSpannerAperture);
        wedges[comp[0]] = w[0];
        wedges[comp[1]] = w[1];
      } else {
        wedges[comp[0]] = make_wedge(points[comp[0]], Direction(0.0), kSpannerAperture);
      }
      continue;
    }
    const auto& triple = part.components[part.component_of[*part.anchor[c]]];
    for (std::size_t p : comp) {
      std::optional<std::size_t> target;
      for (std::size_t x : triple) {
        if (!wedge_contains(wedges[x], points[p])) continue;
        if (!target || distance(points[p], points[x]) < distance(points[p], points[*target])) target = x;
      }
      if (!target) {
        throw Error(ErrorCode::kInvariantViolation, "no wedge of the anchor triple covers point " + std::to_string(p));
      }
      if (distance(points[p], points[*target]) > kAnchorEdgeBound + length_slack(kAnchorEdgeBound)) {
        throw Error(ErrorCode::kInvariantViolation, "anchor edge at point " + std::to_string(p) + " exceeds 4");
      }
      wedges[p] = make_wedge(points[p], direction(points[p], points[*target]), kSpannerAperture);
    }
  }

  for (auto& w : wedges) w.radius = kSpannerRadius;
  return wedges;
}

int hop_case_bound(HopCase c) {
  switch (c) {
    case HopCase::kSameTriple: return 2;
    case HopCase::kSamePair: return 4;
    case HopCase::kBothTriples: return 5;
    default: return 6;
  }
}

HopCase classify_udg_edge(const ComponentPartition& part, std::size_t p, std::size_t q) {
  const bool same = part.component_of[p] == part.component_of[q];
  if (same && part.size_of(p) == 3) return HopCase::kSameTriple;
  if (same) return HopCase::kSamePair;
  if (part.size_of(p) == 3 && part.size_of(q) == 3) return HopCase::kBothTriples;
  return HopCase::kMixed;
}

namespace {

HopReport verify_hops(const CommGraph& g, const CommGraph& udg, int c, const ComponentPartition* part) {
  HopReport r;
  r.bound = c;
  r.pass = g.size() == udg.size();
  if (!r.pass) return r;
  for (std::size_t p = 0; p < udg.size(); ++p) {
    bool has_later = false;
    for (std::size_t q : udg.neighbors(p)) has_later = has_later || q > p;
    if (!has_later) continue;
    const auto dist = hop_distances(g, p, c);
    for (std::size_t q : udg.neighbors(p)) {
      if (q < p) continue;
      ++r.udg_edges;
      const int h = dist[q];
      if (h < 0) {
        r.max_hops = -1;
        if (!r.violation) r.violation = Edge(p, q);
        r.pass = false;
        continue;
      }
      if (r.max_hops >= 0) r.max_hops = std::max(r.max_hops, h);
      if (part) {
        const HopCase hc = classify_udg_edge(*part, p, q);
        auto& slot = r.case_max[static_cast<std::size_t>(hc)];
        slot = std::max(slot, h);
        if (h > hop_case_bound(hc)) {
          r.cases_ok = false;
          if (!r.violation) r.violation = Edge(p, q);
        }
      }
    }
  }
  r.pass = r.pass && r.cases_ok;
  return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

HopReport verify_hop_spanner(const CommGraph& g, const CommGraph& udg, int c) {
  return verify_hops(g, udg, c, nullptr);
}

HopReport verify_hop_spanner(const CommGraph& g, const CommGraph& udg, int c, const ComponentPartition& partition) {
  return verify_hops(g, udg, c, &partition);
}

SpannerResult build_spanner(std::span<const Point> points) {
  SpannerResult out;
  auto t0 = std::chrono::steady_clock::now();
  out.partition = greedy_components(points);
  out.stats.partition_ms = elapsed_ms(t0);
  for (const auto& comp : out.partition.components) {
    if (comp.size() == 3) ++out.stats.triples;
    if (comp.size() == 2) ++out.stats.pairs;
    if (comp.size() == 1) ++out.stats.singles;
  }

  t0 = std::chrono::steady_clock::now();
  out.wedges = orient_components(points, out.partition);
  out.stats.orient_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  out.graph = induced_graph(points, out.wedges);
  out.stats.graph_ms = elapsed_ms(t0);
  for (const auto& e : out.graph.edges()) out.max_edge_length = std::max(out.max_edge_length, e.length);
  if (out.max_edge_length > kSpannerRadius + length_slack(kSpannerRadius)) {
    throw Error(ErrorCode::kInvariantViolation, "spanner edge longer than 7");
  }
  if (!is_connected(out.graph)) throw Error(ErrorCode::kInvariantViolation, "spanner is disconnected");

  t0 = std::chrono::steady_clock::now();
  const CommGraph udg = unit_disk_graph(points);
  out.hops = verify_hop_spanner(out.graph, udg, kSpannerHopBound, out.partition);
  out.stats.verify_ms = elapsed_ms(t0);
  out.hop_stretch = out.hops.max_hops;
  if (!out.hops.pass) {
    const Edge e = *out.hops.violation;
    throw Error(ErrorCode::kHopBoundViolation,
                "UDG edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") exceeds its hop bound");
  }
  return out;
}

}  // namespace bast
