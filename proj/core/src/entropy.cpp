#include "nrwalk/entropy.hpp"

#include <cmath>
#include <sstream>

#include "nrwalk/errors.hpp"

namespace nrw {

std::string start_mode_name(StartMode mode) {
  switch (mode) {
    case StartMode::kVertexPi:
      return "pi";
    case StartMode::kArcUniform:
      return "arc";
    case StartMode::kArcUniformLR:
      return "lr";
    case StartMode::kArcUniformRL:
      return "rl";
  }
  return "unknown";
}

bool is_bipartite_mode(StartMode mode) {
  return mode == StartMode::kArcUniformLR || mode == StartMode::kArcUniformRL;
}

namespace {

int min_degree(const ArcSpace& arcs) {
  int d = arcs.num_vertices() == 0 ? 0 : arcs.degree(0);
  for (int v = 1; v < arcs.num_vertices(); ++v)
    d = std::min(d, arcs.degree(v));
  return d;
}

void check_process_preconditions(const ArcSpace& arcs, int horizon,
                                 StartMode mode, const BipartiteView* bv) {
  if (min_degree(arcs) < 2)
    throw PreconditionError("walk process needs min degree >= 2");
  const int min_horizon = mode == StartMode::kVertexPi ? 1 : 0;
  if (horizon < min_horizon) {
    std::ostringstream os;
    os << "horizon " << horizon << " below minimum " << min_horizon
       << " for mode " << start_mode_name(mode);
    throw PreconditionError(os.str());
  }
  if (is_bipartite_mode(mode)) {
    if (bv == nullptr)
      throw PreconditionError("bipartite start mode needs a bipartite view");
    if (bv->arcs_lr.empty() || bv->arcs_rl.empty())
      throw PreconditionError("bipartite start mode needs crossing arcs");
  }
}

// pi over vertices, computed from the arc space: degree(v) / (2|E|).
Distribution pi_from_arcs(const ArcSpace& arcs) {
  Distribution d;
  d.kind = SupportKind::kVertex;
  d.probs.reserve(static_cast<std::size_t>(arcs.num_vertices()));
  for (int v = 0; v < arcs.num_vertices(); ++v)
    d.probs.emplace_back(arcs.degree(v), arcs.num_arcs());
  return d;
}

Distribution side_pi_from_arcs(const ArcSpace& arcs,
                               const std::vector<int>& side_vertices) {
  Distribution d;
  d.kind = SupportKind::kVertex;
  d.probs.assign(static_cast<std::size_t>(arcs.num_vertices()), Rational(0));
  const int m = arcs.num_arcs() / 2;
  for (int v : side_vertices) d.probs[v] = Rational(arcs.degree(v), m);
  return d;
}

Distribution uniform_class(const ArcSpace& arcs, const std::vector<int>* cls) {
  if (cls == nullptr) {
    Distribution d;
    d.kind = SupportKind::kArc;
    d.probs.assign(static_cast<std::size_t>(arcs.num_arcs()),
                   Rational(1, arcs.num_arcs()));
    return d;
  }
  return uniform_on_arcs(arcs, *cls);
}

// One process step: distribute each arc's mass uniformly over its
// non-returning successors.
Distribution step(const ArcSpace& arcs, const Distribution& p) {
  Distribution q;
  q.kind = SupportKind::kArc;
  q.probs.assign(static_cast<std::size_t>(arcs.num_arcs()), Rational(0));
  for (int a = 0; a < arcs.num_arcs(); ++a) {
    if (p.probs[a] == 0) continue;
    const auto& succ = arcs.successors(a);
    const Rational share = p.probs[a] / static_cast<int>(succ.size());
    for (int b : succ) q.probs[b] += share;
  }
  return q;
}

Distribution head_marginal(const ArcSpace& arcs, const Distribution& p) {
  Distribution q;
  q.kind = SupportKind::kVertex;
  q.probs.assign(static_cast<std::size_t>(arcs.num_vertices()), Rational(0));
  for (int a = 0; a < arcs.num_arcs(); ++a) q.probs[arcs.head(a)] += p.probs[a];
  return q;
}

}  // namespace

ProcessMarginals process_marginals(const ArcSpace& arcs, int horizon,
                                   StartMode mode, const BipartiteView* bv) {
  check_process_preconditions(arcs, horizon, mode, bv);
  ProcessMarginals pm;
  pm.mode = mode;
  pm.horizon = horizon;

  Distribution current;
  if (mode == StartMode::kVertexPi) {
    pm.vertex_marginals.push_back(pi_from_arcs(arcs));
    // First arc: uniform out of the pi-distributed start vertex; the mass
    // of each arc is pi(tail)/deg(tail) = 1/(2|E|).
    current.kind = SupportKind::kArc;
    current.probs.reserve(static_cast<std::size_t>(arcs.num_arcs()));
    for (int a = 0; a < arcs.num_arcs(); ++a)
      current.probs.push_back(pm.vertex_marginals[0].probs[arcs.tail(a)] /
                              arcs.degree(arcs.tail(a)));
  } else {
    const std::vector<int>* cls = nullptr;
    if (mode == StartMode::kArcUniformLR) cls = &bv->arcs_lr;
    if (mode == StartMode::kArcUniformRL) cls = &bv->arcs_rl;
    current = uniform_class(arcs, cls);
  }
  pm.arc_marginals.push_back(current);
  pm.vertex_marginals.push_back(head_marginal(arcs, current));

  const int steps = mode == StartMode::kVertexPi ? horizon - 1 : horizon;
  for (int j = 0; j < steps; ++j) {
    current = step(arcs, current);
    pm.arc_marginals.push_back(current);
    pm.vertex_marginals.push_back(head_marginal(arcs, current));
  }
  return pm;
}

StationarityCheck check_stationarity(const ArcSpace& arcs,
                                     const ProcessMarginals& pm,
                                     const BipartiteView* bv) {
  StationarityCheck res;
  const Distribution pi = pi_from_arcs(arcs);
  Distribution pi_left, pi_right, uni_lr, uni_rl, uni_all;
  const bool bip = is_bipartite_mode(pm.mode);
  if (bip) {
    pi_left = side_pi_from_arcs(arcs, bv->split.left);
    pi_right = side_pi_from_arcs(arcs, bv->split.right);
    uni_lr = uniform_on_arcs(arcs, bv->arcs_lr);
    uni_rl = uniform_on_arcs(arcs, bv->arcs_rl);
  } else {
    uni_all = uniform_class(arcs, nullptr);
  }

  auto fail = [&](int index, const std::string& what) {
    if (res.exact) {
      res.exact = false;
      res.bad_index = index;
      res.detail = what;
    }
  };

  for (std::size_t j = 0; j < pm.arc_marginals.size(); ++j) {
    const Distribution* want = &uni_all;
    if (bip) {
      // Arc j of an LR start crosses left-to-right exactly when j is even;
      // an RL start is the mirror image.
      const bool lr = (j % 2 == 0) == (pm.mode == StartMode::kArcUniformLR);
      want = lr ? &uni_lr : &uni_rl;
    }
    if (!(pm.arc_marginals[j] == *want)) {
      std::ostringstream os;
      os << "arc marginal " << j << " is not uniform on its class";
      fail(static_cast<int>(j), os.str());
    }
  }
  for (std::size_t j = 0; j < pm.vertex_marginals.size(); ++j) {
    const Distribution* want = &pi;
    if (bip) {
      // For a vertex-start or uniform-arc process every vertex marginal is
      // pi itself. In bipartite modes the head of arc j lies on the far
      // side for even j (LR start) and the mirror image for an RL start.
      const bool right = (j % 2 == 0) == (pm.mode == StartMode::kArcUniformLR);
      want = right ? &pi_right : &pi_left;
    }
    if (!(pm.vertex_marginals[j] == *want)) {
      std::ostringstream os;
      os << "vertex marginal " << j << " differs from pi";
      fail(static_cast<int>(j), os.str());
    }
  }
  return res;
}

Rational expectation_bound(const ArcSpace& arcs, int horizon, StartMode mode,
                           const BipartiteView* bv) {
  if (arcs.num_vertices() == 0)
    throw PreconditionError("expectation bound needs vertices");
  switch (mode) {
    case StartMode::kVertexPi: {
      if (horizon < 1)
        throw PreconditionError("vertex-start bound needs horizon >= 1");
      const Rational d_bar(arcs.num_arcs(), arcs.num_vertices());
      return d_bar *
             rational_pow(d_bar - 1, static_cast<unsigned>(horizon - 1));
    }
    case StartMode::kArcUniform: {
      const Rational d_bar(arcs.num_arcs(), arcs.num_vertices());
      return rational_pow(d_bar - 1, static_cast<unsigned>(horizon));
    }
    case StartMode::kArcUniformLR:
    case StartMode::kArcUniformRL: {
      if (bv == nullptr)
        throw PreconditionError("bipartite bound needs a bipartite view");
      // The walk leaves the far side on odd steps and the near side on even
      // steps (counting the steps after the start arc, whose head is on the
      // far side).
      const Rational& near =
          mode == StartMode::kArcUniformLR ? bv->d_left : bv->d_right;
      const Rational& far =
          mode == StartMode::kArcUniformLR ? bv->d_right : bv->d_left;
      return rational_pow(far - 1, static_cast<unsigned>((horizon + 1) / 2)) *
             rational_pow(near - 1, static_cast<unsigned>(horizon / 2));
    }
  }
  throw PreconditionError("unknown start mode");
}

std::vector<double> process_entropy_terms(const ArcSpace& arcs,
                                          const ProcessMarginals& pm) {
  // Each choice after the start is uniform among deg-1 successors of the
  // vertex just reached, so its conditional entropy is E[ln(deg-1)] under
  // that vertex's marginal. Only the first term differs by mode: E[ln deg]
  // for a vertex start (the first arc is a free choice), 0 for arc starts
  // (conditioned away).
  const auto& vm = pm.vertex_marginals;
  auto expected_log_degree = [&](const Distribution& d, int minus) {
    double sum = 0;
    for (int v = 0; v < arcs.num_vertices(); ++v) {
      if (d.probs[v] == 0) continue;
      sum += to_double(d.probs[v]) * std::log(arcs.degree(v) - minus);
    }
    return sum;
  };
  std::vector<double> terms;
  if (pm.mode == StartMode::kVertexPi) {
    terms.push_back(expected_log_degree(vm[0], 0));
    for (int j = 1; j < pm.horizon; ++j)
      terms.push_back(expected_log_degree(vm[j], 1));
  } else {
    terms.push_back(0.0);
    for (int j = 1; j <= pm.horizon; ++j)
      terms.push_back(expected_log_degree(vm[j - 1], 1));
  }
  return terms;
}

EntropyAudit conditional_entropy_chain(const ArcSpace& arcs,
                                       const WalkCountTable& counts,
                                       int horizon, StartMode mode,
                                       const BipartiteView* bv) {
  if (counts.horizon < horizon)
    throw PreconditionError("count table horizon too small");
  EntropyAudit audit;
  audit.mode = mode;
  audit.horizon = horizon;
  audit.marginals = process_marginals(arcs, horizon, mode, bv);
  audit.stationarity = check_stationarity(arcs, audit.marginals, bv);

  const auto& vm = audit.marginals.vertex_marginals;
  audit.entropy_terms = process_entropy_terms(arcs, audit.marginals);
  audit.entropy = 0;
  for (double t : audit.entropy_terms) audit.entropy += t;

  // Chain-rule cross-check: the same total, with the per-step terms taken
  // from the arc marginals (grouping by arc instead of by head vertex).
  double h_arcs = 0;
  const auto& am = audit.marginals.arc_marginals;
  const int last_step = mode == StartMode::kVertexPi ? horizon - 1 : horizon;
  if (mode == StartMode::kVertexPi) h_arcs += audit.entropy_terms[0];
  for (int j = 1; j <= last_step; ++j) {
    const Distribution& p = am[j - 1];
    double term = 0;
    for (int a = 0; a < arcs.num_arcs(); ++a) {
      if (p.probs[a] == 0) continue;
      term += to_double(p.probs[a]) *
              std::log(static_cast<double>(arcs.successors(a).size()));
    }
    h_arcs += term;
  }
  audit.chain_rule_residual = std::abs(audit.entropy - h_arcs) /
                              std::max(1.0, std::abs(audit.entropy));

  // Exact expectation and the count-weighted log under the start law.
  Rational expected = 0;
  double expected_log = 0;
  if (mode == StartMode::kVertexPi) {
    const Distribution& pi = vm[0];
    for (int v = 0; v < arcs.num_vertices(); ++v) {
      if (pi.probs[v] == 0) continue;
      expected += pi.probs[v] * Rational(counts.per_vertex[v][horizon]);
      expected_log +=
          to_double(pi.probs[v]) * log_big(counts.per_vertex[v][horizon]);
    }
  } else {
    const Distribution& start = am[0];
    for (int a = 0; a < arcs.num_arcs(); ++a) {
      if (start.probs[a] == 0) continue;
      expected += start.probs[a] * Rational(counts.per_arc[a][horizon]);
      expected_log +=
          to_double(start.probs[a]) * log_big(counts.per_arc[a][horizon]);
    }
  }
  audit.expected_count = expected;
  audit.expected_log = expected_log;
  audit.bound = expectation_bound(arcs, horizon, mode, bv);
  audit.expectation_ok = audit.expected_count >= audit.bound;
  audit.log_expected = log_rational(audit.expected_count);
  audit.log_bound = log_rational(audit.bound);

  audit.gaps[0] = audit.log_expected - audit.expected_log;
  audit.gaps[1] = audit.expected_log - audit.entropy;
  audit.gaps[2] = audit.entropy - audit.log_bound;
  audit.chain_ok = audit.gaps[0] >= -kChainTolerance &&
                   audit.gaps[1] >= -kChainTolerance &&
                   audit.gaps[2] >= -kChainTolerance;
  return audit;
}

LemmaReport verify_lemma_ahl(const ArcSpace& arcs,
                             const WalkCountTable& counts, int i_max) {
  if (i_max < 1) throw PreconditionError("lemma check needs i_max >= 1");
  LemmaReport rep;
  for (int i = 1; i <= i_max; ++i)
    rep.part_a.push_back(
        conditional_entropy_chain(arcs, counts, i, StartMode::kVertexPi));
  for (int i = 0; i <= i_max; ++i)
    rep.part_b.push_back(
        conditional_entropy_chain(arcs, counts, i, StartMode::kArcUniform));
  rep.ok = true;
  for (const auto& a : rep.part_a) rep.ok = rep.ok && a.ok();
  for (const auto& b : rep.part_b) rep.ok = rep.ok && b.ok();
  return rep;
}

LemmaReport verify_lemma_hoory(const ArcSpace& arcs, const BipartiteView& bv,
                               const WalkCountTable& counts, int i_max) {
  if (i_max < 0) throw PreconditionError("lemma check needs i_max >= 0");
  LemmaReport rep;
  for (int i = 0; i <= i_max; ++i)
    rep.part_a.push_back(conditional_entropy_chain(
        arcs, counts, 2 * i + 1, StartMode::kArcUniformLR, &bv));
  for (int i = 0; i <= i_max; ++i)
    rep.part_b.push_back(conditional_entropy_chain(
        arcs, counts, 2 * i, StartMode::kArcUniformRL, &bv));
  rep.ok = true;
  for (const auto& a : rep.part_a) rep.ok = rep.ok && a.ok();
  for (const auto& b : rep.part_b) rep.ok = rep.ok && b.ok();
  return rep;
}

std::vector<JensenRecord> jensen_certificates(const Graph& g, int i_max) {
  const auto stats = degree_stats(g);
  if (stats.min_degree < 2)
    throw PreconditionError("Jensen certificates need min degree >= 2");
  if (i_max < 1) throw PreconditionError("Jensen certificates need i_max >= 1");

  std::vector<JensenRecord> records;
  const int m = g.num_edges();
  const Rational d_bar = stats.average_degree;
  auto push = [&](std::string id, int i, double lhs, double rhs) {
    JensenRecord rec;
    rec.function_id = std::move(id);
    rec.i = i;
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.gap = lhs - rhs;
    rec.ok = rec.gap >= -kChainTolerance;
    records.push_back(std::move(rec));
  };

  for (int i = 1; i <= i_max; ++i) {
    // E_pi[ln(d (d-1)^{i-1})] vs ln(d_bar (d_bar-1)^{i-1}).
    double lhs = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      const double p = to_double(Rational(g.degree(v), 2 * m));
      lhs += p * (std::log(static_cast<double>(g.degree(v))) +
                  (i - 1) * std::log(static_cast<double>(g.degree(v) - 1)));
    }
    const double rhs = log_rational(
        d_bar * rational_pow(d_bar - 1, static_cast<unsigned>(i - 1)));
    push("x*ln(x*(x-1)^(i-1))", i, lhs, rhs);
  }
  for (int i = 1; i <= i_max; ++i) {
    // E_pi[ln((d-1)^i)] vs ln((d_bar-1)^i).
    double lhs = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      const double p = to_double(Rational(g.degree(v), 2 * m));
      lhs += p * i * std::log(static_cast<double>(g.degree(v) - 1));
    }
    const double rhs =
        log_rational(rational_pow(d_bar - 1, static_cast<unsigned>(i)));
    push("x*ln((x-1)^i)", i, lhs, rhs);
  }
  try {
    const auto bp = bipartition(g);
    if (!bp.left.empty() && !bp.right.empty() && m > 0) {
      auto side_record = [&](const std::vector<int>& side, const char* tag) {
        double lhs = 0;
        for (int v : side) {
          const double p = to_double(Rational(g.degree(v), m));
          lhs += p * std::log(static_cast<double>(g.degree(v) - 1));
        }
        const Rational d_side(m, static_cast<int>(side.size()));
        const double rhs = log_rational(d_side - 1);
        push(std::string("x*ln(x-1)[") + tag + "]", 1, lhs, rhs);
      };
      side_record(bp.left, "left");
      side_record(bp.right, "right");
    }
  } catch (const OddCycleError&) {
    // Not bipartite: the side-wise certificates do not apply.
  }
  return records;
}

}  // namespace nrw
