#ifndef NRWALK_BIPARTITE_HPP
#define NRWALK_BIPARTITE_HPP

#include <vector>

#include "nrwalk/graph.hpp"

namespace nrw {

// Two-coloring of a bipartite graph. side[v] is 0 for the left class and
// 1 for the right class; in every connected component the smallest vertex
// id lands on the left, which makes the split canonical.
struct Bipartition {
  std::vector<int> side;
  std::vector<int> left;   // sorted vertex ids with side 0
  std::vector<int> right;  // sorted vertex ids with side 1

  bool in_left(int v) const { return side[v] == 0; }
};

// Computes the canonical bipartition, or throws OddCycleError carrying a
// witness odd cycle when the graph is not bipartite.
Bipartition bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

// Degree extremes per side; requires both sides non-empty.
struct SideDegrees {
  int min_left = 0;
  int max_left = 0;
  int min_right = 0;
  int max_right = 0;
};

SideDegrees side_degrees(const Graph& g, const Bipartition& bp);

// True when every left vertex has degree exactly dl and every right vertex
// degree exactly dr.
bool is_biregular(const Graph& g, const Bipartition& bp, int dl, int dr);

}  // namespace nrw

#endif
