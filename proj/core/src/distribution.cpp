#include "nrwalk/distribution.hpp"

#include "nrwalk/errors.hpp"

namespace nrw {

bool Distribution::is_valid() const {
  Rational sum = 0;
  for (const auto& p : probs) {
    if (p < 0) return false;
    sum += p;
  }
  return sum == 1;
}

Distribution stationary_pi(const Graph& g) {
  if (g.num_edges() == 0)
    throw PreconditionError("stationary distribution needs at least one edge");
  Distribution d;
  d.kind = SupportKind::kVertex;
  d.probs.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v)
    d.probs.emplace_back(g.degree(v), 2 * g.num_edges());
  return d;
}

Distribution uniform_arcs(const ArcSpace& arcs) {
  if (arcs.num_arcs() == 0)
    throw PreconditionError("uniform arc distribution needs arcs");
  Distribution d;
  d.kind = SupportKind::kArc;
  d.probs.assign(static_cast<std::size_t>(arcs.num_arcs()),
                 Rational(1, arcs.num_arcs()));
  return d;
}

Distribution uniform_on_arcs(const ArcSpace& arcs,
                             const std::vector<int>& support) {
  if (support.empty())
    throw PreconditionError("uniform arc distribution needs arcs");
  Distribution d;
  d.kind = SupportKind::kArc;
  d.probs.assign(static_cast<std::size_t>(arcs.num_arcs()), Rational(0));
  const Rational p(1, static_cast<int>(support.size()));
  for (int a : support) d.probs[a] = p;
  return d;
}

Distribution side_pi(const Graph& g, const std::vector<int>& side_vertices) {
  if (g.num_edges() == 0)
    throw PreconditionError("side distribution needs at least one edge");
  Distribution d;
  d.kind = SupportKind::kVertex;
  d.probs.assign(static_cast<std::size_t>(g.num_vertices()), Rational(0));
  for (int v : side_vertices) d.probs[v] = Rational(g.degree(v), g.num_edges());
  return d;
}

}  // namespace nrw
