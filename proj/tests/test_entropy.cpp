#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "nrwalk/bounds.hpp"
#include "nrwalk/distribution.hpp"
#include "nrwalk/entropy.hpp"
#include "nrwalk/errors.hpp"
#include "nrwalk/generators.hpp"
#include "nrwalk/monte_carlo.hpp"

using namespace nrw;

namespace {

const StartMode kAllModes[] = {StartMode::kVertexPi, StartMode::kArcUniform,
                               StartMode::kArcUniformLR,
                               StartMode::kArcUniformRL};

// Runs the full audit for one graph and mode, asserting every certified
// property.
void expect_clean_audit(const Graph& g, StartMode mode, int horizon) {
  const ArcSpace arcs(g);
  std::optional<BipartiteView> bv;
  if (is_bipartite_mode(mode)) bv = bipartite_view(g, arcs);
  const auto counts = count_table(arcs, horizon);
  const auto audit = conditional_entropy_chain(arcs, counts, horizon, mode,
                                               bv ? &*bv : nullptr);
  CAPTURE(start_mode_name(mode));
  CAPTURE(horizon);
  CHECK(audit.stationarity.exact);
  CHECK(audit.expectation_ok);
  CHECK(audit.chain_ok);
  CHECK(audit.chain_rule_residual <= kChainRuleTolerance);
  CHECK(audit.ok());
}

}  // namespace

TEST_SUITE_BEGIN("entropy");

TEST_CASE("start distributions") {
  const Graph g = make_complete_bipartite(2, 3);
  const auto pi = stationary_pi(g);
  REQUIRE(pi.probs.size() == 5);
  CHECK(pi.is_valid());
  // Left vertices have degree 3 of 2|E| = 12; right vertices degree 2.
  CHECK(pi.probs[0] == Rational(1, 4));
  CHECK(pi.probs[1] == Rational(1, 4));
  CHECK(pi.probs[2] == Rational(1, 6));
  CHECK(pi.probs[4] == Rational(1, 6));

  const ArcSpace arcs(g);
  const auto ua = uniform_arcs(arcs);
  CHECK(ua.is_valid());
  CHECK(ua.probs[0] == Rational(1, 12));

  const auto bv = bipartite_view(g, arcs);
  CHECK(bv.d_left == 3);
  CHECK(bv.d_right == 2);
  CHECK(bv.arcs_lr.size() == 6);
  CHECK(bv.arcs_rl.size() == 6);
  const auto lr = uniform_on_arcs(arcs, bv.arcs_lr);
  CHECK(lr.is_valid());
  for (int a : bv.arcs_lr) CHECK(lr.probs[a] == Rational(1, 6));
  for (int a : bv.arcs_rl) CHECK(lr.probs[a] == 0);

  const auto sp = side_pi(g, bv.split.left);
  CHECK(sp.is_valid());
  CHECK(sp.probs[0] == Rational(1, 2));
  CHECK(sp.probs[2] == 0);

  CHECK_THROWS_AS(stationary_pi(Graph(3)), PreconditionError);
}

TEST_CASE("marginal index conventions") {
  const Graph g = make_petersen();
  const ArcSpace arcs(g);
  const auto pm_pi = process_marginals(arcs, 3, StartMode::kVertexPi);
  CHECK(pm_pi.arc_marginals.size() == 3);
  CHECK(pm_pi.vertex_marginals.size() == 4);
  const auto pm_arc = process_marginals(arcs, 3, StartMode::kArcUniform);
  CHECK(pm_arc.arc_marginals.size() == 4);
  CHECK(pm_arc.vertex_marginals.size() == 4);
  for (const auto& d : pm_pi.arc_marginals) CHECK(d.is_valid());
  for (const auto& d : pm_pi.vertex_marginals) CHECK(d.is_valid());
}

TEST_CASE("marginals stay stationary, exactly") {
  for (const auto& [name, g] : test::tightness_corpus()) {
    const ArcSpace arcs(g);
    CAPTURE(name);
    for (StartMode mode : {StartMode::kVertexPi, StartMode::kArcUniform}) {
      const auto pm = process_marginals(arcs, 5, mode);
      const auto st = check_stationarity(arcs, pm);
      CAPTURE(st.detail);
      CHECK(st.exact);
    }
    if (is_bipartite(g)) {
      const auto bv = bipartite_view(g, arcs);
      for (StartMode mode :
           {StartMode::kArcUniformLR, StartMode::kArcUniformRL}) {
        const auto pm = process_marginals(arcs, 5, mode, &bv);
        const auto st = check_stationarity(arcs, pm, &bv);
        CAPTURE(st.detail);
        CHECK(st.exact);
      }
    }
  }
}

TEST_CASE("alternating marginals land on the expected sides") {
  const Graph g = make_complete_bipartite(2, 3);
  const ArcSpace arcs(g);
  const auto bv = bipartite_view(g, arcs);
  const auto pm = process_marginals(arcs, 4, StartMode::kArcUniformLR, &bv);
  // Arc 0 is left-to-right; after an even number of steps we are back on a
  // left-to-right arc and the head sits on the right side.
  for (int j = 0; j <= 4; ++j) {
    const auto& am = pm.arc_marginals[static_cast<std::size_t>(j)];
    const auto& expect_class = (j % 2 == 0) ? bv.arcs_lr : bv.arcs_rl;
    for (int a : expect_class)
      CHECK(am.probs[a] == Rational(1, expect_class.size()));
    const auto& vm = pm.vertex_marginals[static_cast<std::size_t>(j)];
    const auto& on_side = (j % 2 == 0) ? bv.split.right : bv.split.left;
    Rational mass = 0;
    for (int v : on_side) mass += vm.probs[v];
    CHECK(mass == 1);
  }
}

TEST_CASE("entropy terms and spot value for K4") {
  const Graph g = make_complete(4);
  const ArcSpace arcs(g);
  const auto counts = count_table(arcs, 2);
  const auto audit =
      conditional_entropy_chain(arcs, counts, 2, StartMode::kVertexPi);
  // Two choices: the start arc (ln 3) and one continuation (ln 2).
  REQUIRE(audit.entropy_terms.size() == 2);
  CHECK(audit.entropy_terms[0] == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(audit.entropy_terms[1] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(audit.entropy - std::log(6.0)) <= 1e-12);
  // K4 is regular, so the whole chain collapses to equalities.
  CHECK(audit.expected_count == 6);
  CHECK(audit.bound == 6);
  for (double gap : audit.gaps) CHECK(std::abs(gap) <= kChainTolerance);
}

TEST_CASE("expectation bounds in closed form") {
  const Graph k23 = make_complete_bipartite(2, 3);
  const ArcSpace arcs(k23);
  const auto bv = bipartite_view(k23, arcs);
  // d_bar = 12/5.
  CHECK(expectation_bound(arcs, 1, StartMode::kVertexPi) == Rational(12, 5));
  CHECK(expectation_bound(arcs, 3, StartMode::kVertexPi) ==
        Rational(12, 5) * Rational(7, 5) * Rational(7, 5));
  CHECK(expectation_bound(arcs, 0, StartMode::kArcUniform) == 1);
  CHECK(expectation_bound(arcs, 2, StartMode::kArcUniform) ==
        Rational(49, 25));
  // d_L = 3, d_R = 2: left-to-right walks alternate factors 1, 2.
  CHECK(expectation_bound(arcs, 1, StartMode::kArcUniformLR, &bv) == 1);
  CHECK(expectation_bound(arcs, 2, StartMode::kArcUniformLR, &bv) == 2);
  CHECK(expectation_bound(arcs, 3, StartMode::kArcUniformLR, &bv) == 2);
  CHECK(expectation_bound(arcs, 1, StartMode::kArcUniformRL, &bv) == 2);
  CHECK(expectation_bound(arcs, 2, StartMode::kArcUniformRL, &bv) == 2);
  CHECK(expectation_bound(arcs, 3, StartMode::kArcUniformRL, &bv) == 4);
}

TEST_CASE("exact expectations on an irregular graph") {
  const Graph g = make_complete_bipartite(2, 3);
  const ArcSpace arcs(g);
  const auto counts = count_table(arcs, 2);
  const auto audit =
      conditional_entropy_chain(arcs, counts, 1, StartMode::kArcUniform);
  // Half the arcs see a degree-2 head (one continuation), half a degree-3
  // head (two): E[n_1] = 3/2 against the bound (d_bar - 1) = 7/5.
  CHECK(audit.expected_count == Rational(3, 2));
  CHECK(audit.bound == Rational(7, 5));
  CHECK(audit.expectation_ok);
  CHECK(audit.ok());
}

TEST_CASE("full audits pass on the named corpus") {
  for (const auto& [name, g] : test::tightness_corpus()) {
    CAPTURE(name);
    const int h = std::min(6, *girth(g));
    expect_clean_audit(g, StartMode::kVertexPi, h);
    expect_clean_audit(g, StartMode::kArcUniform, h);
    if (is_bipartite(g)) {
      expect_clean_audit(g, StartMode::kArcUniformLR, h);
      expect_clean_audit(g, StartMode::kArcUniformRL, h);
    }
  }
}

TEST_CASE("full audits pass on random graphs") {
  for (int trial = 0; trial < 12; ++trial) {
    CAPTURE(trial);
    expect_clean_audit(test::random_connected_graph(6 + trial % 7, trial % 5,
                                                    6600u + trial),
                       trial % 2 ? StartMode::kVertexPi
                                 : StartMode::kArcUniform,
                       2 + trial % 4);
    const Graph b = test::random_bipartite_graph(4 + trial % 4, 3, trial % 4,
                                                 6700u + trial);
    expect_clean_audit(b,
                       trial % 2 ? StartMode::kArcUniformLR
                                 : StartMode::kArcUniformRL,
                       2 + trial % 4);
  }
}

TEST_CASE("regular graphs achieve the equality case") {
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = test::random_regular_graph(12 + 2 * trial, 3 + trial % 3,
                                               6800u + trial);
    const ArcSpace arcs(g);
    const auto counts = count_table(arcs, 5);
    CAPTURE(trial);
    for (StartMode mode : {StartMode::kVertexPi, StartMode::kArcUniform}) {
      const auto audit =
          conditional_entropy_chain(arcs, counts, 5, mode);
      CHECK(audit.expected_count == audit.bound);
      for (double gap : audit.gaps) CHECK(std::abs(gap) <= kChainTolerance);
    }
  }
}

TEST_CASE("lemma reports") {
  const Graph g = test::random_connected_graph(9, 4, 321);
  const ArcSpace arcs(g);
  const auto counts = count_table(arcs, 6);
  const auto ahl = verify_lemma_ahl(arcs, counts, 6);
  CHECK(ahl.ok);
  CHECK(ahl.part_a.size() == 6);   // i = 1..6
  CHECK(ahl.part_b.size() == 7);   // i = 0..6
  for (const auto& audit : ahl.part_a) CHECK(audit.ok());
  for (const auto& audit : ahl.part_b) CHECK(audit.ok());

  const Graph b = make_heawood();
  const ArcSpace barcs(b);
  const auto bview = bipartite_view(b, barcs);
  const auto bcounts = count_table(barcs, 7);
  const auto hoory = verify_lemma_hoory(barcs, bview, bcounts, 3);
  CHECK(hoory.ok);
  CHECK(hoory.part_a.size() == 4);  // horizons 1, 3, 5, 7
  CHECK(hoory.part_b.size() == 4);  // horizons 0, 2, 4, 6
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(hoory.part_a[i].horizon == 2 * static_cast<int>(i) + 1);
    CHECK(hoory.part_b[i].horizon == 2 * static_cast<int>(i));
  }
}

TEST_CASE("per-step bounds sum to the theorem bounds, exactly") {
  // Odd girth: 1 + sum of vertex-start expectation bounds.
  const Graph p = make_petersen();
  const ArcSpace parcs(p);
  Rational total = 1;
  for (int i = 1; i <= 2; ++i)
    total += expectation_bound(parcs, i, StartMode::kVertexPi);
  CHECK(total == ahl_bound(degree_stats(p).average_degree, 5));

  // Even girth: doubled arc-start bounds.
  const Graph h = make_heawood();
  const ArcSpace harcs(h);
  total = 0;
  for (int i = 0; i < 3; ++i)
    total += 2 * expectation_bound(harcs, i, StartMode::kArcUniform);
  CHECK(total == ahl_bound(degree_stats(h).average_degree, 6));

  // Bipartite: the alternating bounds, split by parity as the side-wise
  // walk sums are.
  for (int trial = 0; trial < 10; ++trial) {
    const Graph b = test::random_bipartite_graph(4 + trial % 4, 3, trial % 5,
                                                 6900u + trial);
    const auto og = girth(b);
    REQUIRE(og);
    const ArcSpace arcs(b);
    const auto bv = bipartite_view(b, arcs);
    const auto [lb_l, lb_r] = hoory_bounds(bv.d_left, bv.d_right, *og);
    Rational left = 0, right = 0;
    for (int i = 0; i < *og / 2; ++i) {
      left += expectation_bound(
          arcs, i, i % 2 ? StartMode::kArcUniformLR : StartMode::kArcUniformRL,
          &bv);
      right += expectation_bound(
          arcs, i, i % 2 ? StartMode::kArcUniformRL : StartMode::kArcUniformLR,
          &bv);
    }
    CAPTURE(trial);
    CHECK(left == lb_l);
    CHECK(right == lb_r);
  }
}

TEST_CASE("Jensen certificates") {
  const auto recs = jensen_certificates(make_complete_bipartite(2, 3), 4);
  REQUIRE(!recs.empty());
  bool saw_bipartite = false;
  for (const auto& r : recs) {
    CAPTURE(r.function_id);
    CAPTURE(r.i);
    CHECK(r.ok);
    CHECK(r.gap == r.lhs - r.rhs);
    if (r.function_id.find("left") != std::string::npos) saw_bipartite = true;
  }
  CHECK(saw_bipartite);

  // Regular graphs make every Jensen step an equality.
  for (const auto& r : jensen_certificates(make_petersen(), 4)) {
    CHECK(std::abs(r.gap) <= kChainTolerance);
  }

  // Irregular graphs make the first Jensen step strictly loose: for
  // K_{2,3}, E_pi[ln d] = (ln 6)/2 > ln(12/5).
  bool strict = false;
  for (const auto& r : jensen_certificates(make_complete_bipartite(2, 3), 3))
    if (r.i == 1 && r.function_id == "x*ln(x*(x-1)^(i-1))")
      strict = r.gap > 1e-3;
  CHECK(strict);
}

TEST_CASE("preconditions are enforced") {
  // A path has min degree 1: the process could die.
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const ArcSpace arcs(path);
  CHECK_THROWS_AS(process_marginals(arcs, 2, StartMode::kArcUniform),
                  PreconditionError);

  const Graph c5 = make_cycle(5);
  const ArcSpace c5arcs(c5);
  CHECK_THROWS_AS(process_marginals(c5arcs, 0, StartMode::kVertexPi),
                  PreconditionError);
  CHECK_NOTHROW(process_marginals(c5arcs, 0, StartMode::kArcUniform));
  // Bipartite modes need the view.
  CHECK_THROWS_AS(process_marginals(c5arcs, 2, StartMode::kArcUniformLR),
                  PreconditionError);
  CHECK_THROWS_AS(bipartite_view(c5, c5arcs), OddCycleError);
  try {
    bipartite_view(c5, c5arcs);
  } catch (const OddCycleError& e) {
    CHECK(e.cycle.size() % 2 == 1);
    CHECK(e.cycle.size() >= 3);
  }
}

TEST_CASE("Monte-Carlo cross-check agrees with the exact audit") {
  const Graph g = make_petersen();
  const ArcSpace arcs(g);
  const auto mc =
      run_monte_carlo(arcs, 3, StartMode::kVertexPi, 99, 40000);
  CHECK(mc.samples == 40000);
  CHECK(mc.frequencies_ok);
  CHECK(mc.entropy_ok);
  CHECK(mc.ok());
  CHECK(std::abs(mc.entropy_exact - (std::log(3.) + 2 * std::log(2.))) <=
        1e-12);
  CHECK(std::abs(mc.entropy_estimate - mc.entropy_exact) <=
        kEntropySigmaLimit * mc.entropy_std_error + 1e-12);

  // Deterministic in the seed.
  const auto again =
      run_monte_carlo(arcs, 3, StartMode::kVertexPi, 99, 40000);
  CHECK(again.max_abs_z == mc.max_abs_z);
  CHECK(again.entropy_estimate == mc.entropy_estimate);
  // On a regular graph every walk has the same surprisal, so the estimate
  // cannot depend on the seed (the variance is cancellation noise); an
  // irregular graph separates seeds.
  CHECK(mc.entropy_std_error <= 1e-6);
  const ArcSpace irregular(make_complete_bipartite(2, 3));
  const auto seed_a =
      run_monte_carlo(irregular, 3, StartMode::kVertexPi, 99, 40000);
  const auto seed_b =
      run_monte_carlo(irregular, 3, StartMode::kVertexPi, 100, 40000);
  CHECK(seed_a.entropy_estimate != seed_b.entropy_estimate);
  CHECK(seed_a.entropy_std_error > 0);
}

TEST_CASE("Monte-Carlo handles deterministic processes") {
  // On a cycle every step is forced: entropy 0 with zero variance.
  const ArcSpace arcs(make_cycle(6));
  const auto mc = run_monte_carlo(arcs, 4, StartMode::kArcUniform, 7, 5000);
  CHECK(mc.entropy_exact == 0);
  CHECK(mc.entropy_estimate == 0);
  CHECK(mc.entropy_std_error == 0);
  CHECK(mc.ok());
}

TEST_CASE("Monte-Carlo covers every mode") {
  const Graph b = test::random_bipartite_graph(5, 3, 2, 17);
  const ArcSpace arcs(b);
  const auto bv = bipartite_view(b, arcs);
  for (StartMode mode : kAllModes) {
    const auto mc = run_monte_carlo(arcs, 4, mode, 1234, 30000, &bv);
    CAPTURE(start_mode_name(mode));
    CHECK(mc.ok());
  }
}

TEST_SUITE_END();
