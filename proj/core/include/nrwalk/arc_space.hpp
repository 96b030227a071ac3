#ifndef NRWALK_ARC_SPACE_HPP
#define NRWALK_ARC_SPACE_HPP

#include <vector>

#include "nrwalk/bipartite.hpp"
#include "nrwalk/graph.hpp"
#include "nrwalk/numeric.hpp"

namespace nrw {

// Directed version of a graph: each undirected edge {u,v} (u < v, edges in
// lexicographic order) becomes the arc pair (2k: u->v, 2k+1: v->u), so the
// reverse of an arc is its id XOR 1. The successors of an arc are the
// out-arcs of its head minus the reverse arc — following one never
// backtracks.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g);

  int num_arcs() const { return static_cast<int>(head_.size()); }
  int num_vertices() const { return static_cast<int>(out_arcs_.size()); }

  int tail(int a) const { return tail_[a]; }
  int head(int a) const { return head_[a]; }
  static int reverse(int a) { return a ^ 1; }

  const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
  const std::vector<int>& successors(int a) const { return succ_[a]; }

  int degree(int v) const { return static_cast<int>(out_arcs_[v].size()); }

 private:
  std::vector<int> tail_, head_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<std::vector<int>> succ_;
};

// A bipartite graph seen through its arc space: side classes, exact side
// average degrees, and the two arc classes by direction of crossing.
struct BipartiteView {
  Bipartition split;
  Rational d_left;            // |E| / n_L, exact
  Rational d_right;           // |E| / n_R, exact
  std::vector<int> arcs_lr;   // arcs with tail on the left
  std::vector<int> arcs_rl;   // arcs with tail on the right

  int n_left() const { return static_cast<int>(split.left.size()); }
  int n_right() const { return static_cast<int>(split.right.size()); }
};

// Throws OddCycleError when g is not bipartite, PreconditionError when a
// side is empty (no edges to assign a crossing direction to).
BipartiteView bipartite_view(const Graph& g, const ArcSpace& arcs);

}  // namespace nrw

#endif
