#ifndef NRWALK_BOUNDS_HPP
#define NRWALK_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrwalk/arc_space.hpp"
#include "nrwalk/graph.hpp"
#include "nrwalk/numeric.hpp"
#include "nrwalk/walk_counts.hpp"

namespace nrw {

// Girth/degree lower bounds on the vertex count, evaluated exactly.
//
//   moore_bound:  minimum degree delta >= 2, finite girth g.
//     g = 2r+1:  1 + delta * sum_{i<r} (delta-1)^i
//     g = 2r:    2 * sum_{i<r} (delta-1)^i
//   ahl_bound:   the same expressions with the average degree instead.
//   hoory_bounds: bipartite refinement; bounds n_L and n_R separately via
//     the two side average degrees (girth must be even):
//     lb_L = sum_{i<r} (d_R-1)^{ceil(i/2)} (d_L-1)^{floor(i/2)}, lb_R
//     symmetric.
Rational moore_bound(int delta, int girth);
Rational ahl_bound(const Rational& d_bar, int girth);
std::pair<Rational, Rational> hoory_bounds(const Rational& d_left,
                                           const Rational& d_right,
                                           int girth);

enum class Verdict { kTight, kSlack, kViolated, kPreconditionUnmet };

std::string verdict_name(Verdict v);

// One evaluated bound against the quantity it constrains. `margin` is
// (actual - bound); tight means margin is exactly zero.
struct BoundCheck {
  Verdict verdict = Verdict::kPreconditionUnmet;
  Rational value;
  Rational margin;
  BigInt ceil_value;  // smallest integer >= value (integer implication)
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  std::optional<int> girth;  // nullopt = no cycle (forest)
  int delta = 0;
  Rational d_bar;
  BoundCheck moore;
  BoundCheck ahl;
  bool bipartite = false;
  std::optional<int> n_left, n_right;
  std::optional<Rational> d_left, d_right;
  std::optional<BoundCheck> hoory_left, hoory_right;

  // True when any applicable bound came out violated — impossible for a
  // correct implementation, but representable so audits can say so.
  bool any_violated() const;
};

BoundReport audit_graph(const Graph& g, std::string graph_id = "");

// Verification of the walk-sum inequalities behind the bounds: at every
// vertex (odd girth) or edge (even girth), the vertex count dominates the
// sum of walk counts out to the girth-derived radius. `sums` is indexed by
// vertex id or by edge index (position in Graph::edges() order); `witness`
// is the site with the largest sum, i.e. the least slack.
struct ObservationResult {
  bool holds = false;
  BigInt min_slack;
  int witness = -1;
  std::vector<BigInt> sums;
};

// Requires odd finite girth 2r+1 and a count table with horizon >= r:
// checks n >= sum_{i<=r} n_i(v) for every vertex.
ObservationResult verify_observation_odd(const Graph& g,
                                         const WalkCountTable& counts);

// Requires even finite girth 2r and horizon >= r-1: checks
// n >= sum_{i<r} [n_i(a) + n_i(reverse a)] for every edge.
ObservationResult verify_observation_even(const Graph& g,
                                          const WalkCountTable& counts);

// Bipartite sharpening (girth 2r, horizon >= r-1). For each edge with
// arcs a1 (left to right) and a2 (right to left):
//   n_L >= sum_{2i+1 <= r-1} n_{2i+1}(a1) + sum_{2i <= r-1} n_{2i}(a2)
// and the mirrored statement bounds n_R. Both directions are checked;
// `sums` holds the left-side sums and `sums_right` the right-side ones.
struct BipartiteObservationResult {
  bool holds = false;
  BigInt min_slack_left, min_slack_right;
  int witness_left = -1, witness_right = -1;
  std::vector<BigInt> sums_left, sums_right;
};

BipartiteObservationResult verify_observation_bipartite(
    const Graph& g, const BipartiteView& bv, const ArcSpace& arcs,
    const WalkCountTable& counts);

}  // namespace nrw

#endif
