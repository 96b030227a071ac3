#ifndef NRWALK_WALK_COUNTS_HPP
#define NRWALK_WALK_COUNTS_HPP

#include <map>
#include <vector>

#include "nrwalk/arc_space.hpp"
#include "nrwalk/numeric.hpp"

namespace nrw {

// Exact counts of non-returning walks up to a horizon.
//
// Index conventions (they differ by one, deliberately):
//   per_vertex[v][i] counts walks of i arcs starting at vertex v.
//   per_arc[a][i]    counts walks of i+1 arcs starting with arc a
//                    (the walk consisting of a alone is the i=0 case).
struct WalkCountTable {
  int horizon = 0;
  std::vector<std::vector<BigInt>> per_arc;
  std::vector<std::vector<BigInt>> per_vertex;
};

WalkCountTable count_table(const ArcSpace& arcs, int horizon);

// Single-cell variants; equal to the corresponding table entries.
BigInt count_from_vertex(const ArcSpace& arcs, int v, int i);
BigInt count_from_arc(const ArcSpace& arcs, int a, int i);

// A walk start: either a vertex (walks of i arcs) or an arc (walks of i+1
// arcs beginning with it).
struct WalkStart {
  enum class Kind { kVertex, kArc };
  Kind kind;
  int id;

  static WalkStart vertex(int v) { return {Kind::kVertex, v}; }
  static WalkStart arc(int a) { return {Kind::kArc, a}; }
};

// Limits for explicit enumeration; exceeding either throws
// EnumerationLimitError.
inline constexpr int kMaxEnumerationLength = 12;
inline constexpr long long kMaxEnumerationWalks = 1'000'000;

// All non-returning walks from the start, as arc-id sequences. For a vertex
// start each walk has exactly `i` arcs; for an arc start, i+1 arcs of which
// the first is the start arc itself. The list size always equals the
// corresponding count, which is the point: this is the oracle the dynamic
// program is validated against.
std::vector<std::vector<int>> brute_force_walks(const ArcSpace& arcs,
                                                WalkStart start, int i);

// Final vertices of all walks of length 0..radius from the start (for arc
// starts: of the walks counted by n_0 .. n_radius). `distinct` is true iff
// no vertex repeats.
struct EndpointMultiset {
  std::map<int, long long> counts;
  bool distinct = true;

  void merge(const EndpointMultiset& other);
};

EndpointMultiset endpoint_multiset(const ArcSpace& arcs, WalkStart start,
                                   int radius);

}  // namespace nrw

#endif
