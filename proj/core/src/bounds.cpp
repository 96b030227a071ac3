#include "nrwalk/bounds.hpp"

#include <sstream>

#include "nrwalk/bipartite.hpp"
#include "nrwalk/errors.hpp"

namespace nrw {

namespace {

void require_girth_at_least(int girth, int least) {
  if (girth < least) {
    std::ostringstream os;
    os << "girth " << girth << " out of range (need >= " << least << ")";
    throw PreconditionError(os.str());
  }
}

// sum_{i=0}^{r-1} q^i, exact.
Rational geometric_sum(const Rational& q, int r) {
  Rational sum = 0;
  Rational power = 1;
  for (int i = 0; i < r; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

}  // namespace

Rational moore_bound(int delta, int girth) {
  if (delta < 2) throw PreconditionError("moore bound needs delta >= 2");
  require_girth_at_least(girth, 3);
  return ahl_bound(Rational(delta), girth);
}

Rational ahl_bound(const Rational& d_bar, int girth) {
  if (d_bar < 2)
    throw PreconditionError("degree-based bound needs degree >= 2");
  require_girth_at_least(girth, 3);
  if (girth % 2 == 1) {
    const int r = (girth - 1) / 2;
    return 1 + d_bar * geometric_sum(d_bar - 1, r);
  }
  const int r = girth / 2;
  return 2 * geometric_sum(d_bar - 1, r);
}

std::pair<Rational, Rational> hoory_bounds(const Rational& d_left,
                                           const Rational& d_right,
                                           int girth) {
  if (d_left < 2 || d_right < 2)
    throw PreconditionError("bipartite bound needs both side degrees >= 2");
  require_girth_at_least(girth, 4);
  if (girth % 2 != 0)
    throw PreconditionError("bipartite bound needs even girth");
  const int r = girth / 2;
  // Walks from a side alternate: the i-th term mixes ceil(i/2) steps off
  // the far side with floor(i/2) steps off the near side.
  auto side_sum = [&](const Rational& near, const Rational& far) {
    Rational sum = 0;
    for (int i = 0; i < r; ++i)
      sum += rational_pow(far - 1, static_cast<unsigned>((i + 1) / 2)) *
             rational_pow(near - 1, static_cast<unsigned>(i / 2));
    return sum;
  };
  return {side_sum(d_left, d_right), side_sum(d_right, d_left)};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTight:
      return "TIGHT";
    case Verdict::kSlack:
      return "SLACK";
    case Verdict::kViolated:
      return "VIOLATED";
    case Verdict::kPreconditionUnmet:
      return "PRECONDITION_UNMET";
  }
  return "UNKNOWN";
}

bool BoundReport::any_violated() const {
  auto bad = [](const BoundCheck& c) { return c.verdict == Verdict::kViolated; };
  return bad(moore) || bad(ahl) ||
         (hoory_left && bad(*hoory_left)) ||
         (hoory_right && bad(*hoory_right));
}

namespace {

BoundCheck make_check(const Rational& bound, const Rational& actual) {
  BoundCheck c;
  c.value = bound;
  c.margin = actual - bound;
  c.ceil_value = rational_ceil(bound);
  if (c.margin == 0)
    c.verdict = Verdict::kTight;
  else if (c.margin > 0)
    c.verdict = Verdict::kSlack;
  else
    c.verdict = Verdict::kViolated;
  return c;
}

}  // namespace

BoundReport audit_graph(const Graph& g, std::string graph_id) {
  BoundReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.num_vertices();
  r.girth = girth(g);
  if (r.n > 0) {
    const auto stats = degree_stats(g);
    r.delta = stats.min_degree;
    r.d_bar = stats.average_degree;
  }
  const bool theorems_apply = r.delta >= 2 && r.girth.has_value();
  if (theorems_apply) {
    r.moore = make_check(moore_bound(r.delta, *r.girth), Rational(r.n));
    r.ahl = make_check(ahl_bound(r.d_bar, *r.girth), Rational(r.n));
  }
  try {
    const auto bp = bipartition(g);
    r.bipartite = true;
    if (!bp.left.empty() && !bp.right.empty() && g.num_edges() > 0) {
      r.n_left = static_cast<int>(bp.left.size());
      r.n_right = static_cast<int>(bp.right.size());
      r.d_left = Rational(g.num_edges(), *r.n_left);
      r.d_right = Rational(g.num_edges(), *r.n_right);
      r.hoory_left.emplace();
      r.hoory_right.emplace();
      if (theorems_apply) {
        auto [lb_l, lb_r] = hoory_bounds(*r.d_left, *r.d_right, *r.girth);
        r.hoory_left = make_check(lb_l, Rational(*r.n_left));
        r.hoory_right = make_check(lb_r, Rational(*r.n_right));
      }
    }
  } catch (const OddCycleError&) {
    r.bipartite = false;
  }
  return r;
}

namespace {

int required_girth(const Graph& g, bool odd) {
  auto og = girth(g);
  if (!og)
    throw PreconditionError("observation needs finite girth");
  if ((*og % 2 == 1) != odd) {
    std::ostringstream os;
    os << "observation needs " << (odd ? "odd" : "even") << " girth, got "
       << *og;
    throw PreconditionError(os.str());
  }
  return *og;
}

void require_horizon(const WalkCountTable& counts, int needed) {
  if (counts.horizon < needed) {
    std::ostringstream os;
    os << "count table horizon " << counts.horizon << " < required "
       << needed;
    throw PreconditionError(os.str());
  }
}

ObservationResult finish(const Graph& g, std::vector<BigInt> sums) {
  ObservationResult res;
  res.sums = std::move(sums);
  const BigInt n = g.num_vertices();
  bool first = true;
  for (std::size_t k = 0; k < res.sums.size(); ++k) {
    BigInt slack = n - res.sums[k];
    if (first || slack < res.min_slack) {
      res.min_slack = slack;
      res.witness = static_cast<int>(k);
      first = false;
    }
  }
  res.holds = !first && res.min_slack >= 0;
  return res;
}

}  // namespace

ObservationResult verify_observation_odd(const Graph& g,
                                         const WalkCountTable& counts) {
  const int girth_value = required_girth(g, /*odd=*/true);
  const int r = (girth_value - 1) / 2;
  require_horizon(counts, r);
  std::vector<BigInt> sums(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    BigInt sum = 0;
    for (int i = 0; i <= r; ++i) sum += counts.per_vertex[v][i];
    sums[v] = std::move(sum);
  }
  return finish(g, std::move(sums));
}

ObservationResult verify_observation_even(const Graph& g,
                                          const WalkCountTable& counts) {
  const int girth_value = required_girth(g, /*odd=*/false);
  const int r = girth_value / 2;
  require_horizon(counts, r - 1);
  std::vector<BigInt> sums(static_cast<std::size_t>(g.num_edges()));
  for (int k = 0; k < g.num_edges(); ++k) {
    BigInt sum = 0;
    for (int i = 0; i < r; ++i)
      sum += counts.per_arc[2 * k][i] + counts.per_arc[2 * k + 1][i];
    sums[k] = std::move(sum);
  }
  return finish(g, std::move(sums));
}

BipartiteObservationResult verify_observation_bipartite(
    const Graph& g, const BipartiteView& bv, const ArcSpace& arcs,
    const WalkCountTable& counts) {
  const int girth_value = required_girth(g, /*odd=*/false);
  const int r = girth_value / 2;
  require_horizon(counts, r - 1);
  BipartiteObservationResult res;
  const int m = g.num_edges();
  res.sums_left.resize(static_cast<std::size_t>(m));
  res.sums_right.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    int a1 = 2 * k, a2 = 2 * k + 1;  // a1 crosses left-to-right
    if (!bv.split.in_left(arcs.tail(a1))) std::swap(a1, a2);
    BigInt to_left = 0, to_right = 0;
    for (int i = 0; i < r; ++i) {
      // A walk of i+1 arcs from a left-to-right arc ends on the left side
      // exactly when i is odd; from a right-to-left arc, when i is even.
      if (i % 2 == 1) {
        to_left += counts.per_arc[a1][i];
        to_right += counts.per_arc[a2][i];
      } else {
        to_left += counts.per_arc[a2][i];
        to_right += counts.per_arc[a1][i];
      }
    }
    res.sums_left[k] = std::move(to_left);
    res.sums_right[k] = std::move(to_right);
  }
  const BigInt n_left = bv.n_left();
  const BigInt n_right = bv.n_right();
  bool first = true;
  for (int k = 0; k < m; ++k) {
    BigInt slack_l = n_left - res.sums_left[k];
    BigInt slack_r = n_right - res.sums_right[k];
    if (first || slack_l < res.min_slack_left) {
      res.min_slack_left = slack_l;
      res.witness_left = k;
    }
    if (first || slack_r < res.min_slack_right) {
      res.min_slack_right = slack_r;
      res.witness_right = k;
    }
    first = false;
  }
  res.holds = !first && res.min_slack_left >= 0 && res.min_slack_right >= 0;
  return res;
}

}  // namespace nrw
