#include "nrwalk/arc_space.hpp"

#include "nrwalk/errors.hpp"

namespace nrw {

ArcSpace::ArcSpace(const Graph& g) {
  const int n = g.num_vertices();
  const auto edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  tail_.resize(static_cast<std::size_t>(2 * m));
  head_.resize(static_cast<std::size_t>(2 * m));
  out_arcs_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    auto [u, v] = edge_list[static_cast<std::size_t>(k)];
    tail_[2 * k] = u;
    head_[2 * k] = v;
    tail_[2 * k + 1] = v;
    head_[2 * k + 1] = u;
    out_arcs_[u].push_back(2 * k);
    out_arcs_[v].push_back(2 * k + 1);
  }
  succ_.resize(static_cast<std::size_t>(2 * m));
  for (int a = 0; a < 2 * m; ++a) {
    const auto& out = out_arcs_[head_[a]];
    succ_[a].reserve(out.size() - 1);
    for (int b : out)
      if (b != reverse(a)) succ_[a].push_back(b);
  }
}

BipartiteView bipartite_view(const Graph& g, const ArcSpace& arcs) {
  BipartiteView bv;
  bv.split = bipartition(g);
  if (bv.split.left.empty() || bv.split.right.empty())
    throw PreconditionError("bipartite view needs both sides non-empty");
  // Every edge has exactly one endpoint per side, so the side degree sums
  // both equal |E|.
  bv.d_left = Rational(g.num_edges(), bv.n_left());
  bv.d_right = Rational(g.num_edges(), bv.n_right());
  for (int a = 0; a < arcs.num_arcs(); ++a)
    (bv.split.in_left(arcs.tail(a)) ? bv.arcs_lr : bv.arcs_rl).push_back(a);
  return bv;
}

}  // namespace nrw
