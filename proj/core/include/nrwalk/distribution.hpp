#ifndef NRWALK_DISTRIBUTION_HPP
#define NRWALK_DISTRIBUTION_HPP

#include <vector>

#include "nrwalk/arc_space.hpp"
#include "nrwalk/graph.hpp"
#include "nrwalk/numeric.hpp"

namespace nrw {

enum class SupportKind { kVertex, kArc };

// Exact-rational probability vector over the vertices or arcs of a graph.
struct Distribution {
  SupportKind kind = SupportKind::kVertex;
  std::vector<Rational> probs;

  // Entries are >= 0 and sum to exactly 1.
  bool is_valid() const;

  bool operator==(const Distribution&) const = default;
};

// The degree-proportional vertex distribution d_v / (2|E|) — stationary for
// the non-returning walk process.
Distribution stationary_pi(const Graph& g);

// Uniform over all arcs.
Distribution uniform_arcs(const ArcSpace& arcs);

// Uniform over a subset of arcs (probability 1/|support| on each).
Distribution uniform_on_arcs(const ArcSpace& arcs,
                             const std::vector<int>& support);

// d_v / |E| on one side of a bipartition, zero elsewhere: the vertex
// marginal of the walk process when the current side is known.
Distribution side_pi(const Graph& g, const std::vector<int>& side_vertices);

}  // namespace nrw

#endif
