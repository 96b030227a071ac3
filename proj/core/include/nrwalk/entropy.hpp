#ifndef NRWALK_ENTROPY_HPP
#define NRWALK_ENTROPY_HPP

#include <string>
#include <vector>

#include "nrwalk/arc_space.hpp"
#include "nrwalk/distribution.hpp"
#include "nrwalk/numeric.hpp"
#include "nrwalk/walk_counts.hpp"

namespace nrw {

// How the walk process is started. The process itself is always the same:
// each following arc is chosen uniformly among the non-returning successors
// of the previous one.
enum class StartMode {
  kVertexPi,      // vertex ~ pi = d_v/(2|E|), first arc uniform out of it
  kArcUniform,    // first arc uniform over all arcs
  kArcUniformLR,  // first arc uniform over the left-to-right arcs
  kArcUniformRL,  // first arc uniform over the right-to-left arcs
};

std::string start_mode_name(StartMode mode);
bool is_bipartite_mode(StartMode mode);

// Exact marginals of every arc and every intermediate vertex of the walk
// process, computed by rational push-forward.
//
// Index conventions:
//   kVertexPi:  vertex_marginals[0] is the start vertex; arc_marginals[j]
//               is the (j+1)-th arc, j = 0..horizon-1; vertex_marginals[j]
//               (j >= 1) is the head of arc_marginals[j-1].
//   arc modes:  arc_marginals[j] is arc j, j = 0..horizon;
//               vertex_marginals[j] is the head of arc j.
// In both cases vertex_marginals[j] is the vertex whose degree governs the
// choice following arc j.
struct ProcessMarginals {
  StartMode mode = StartMode::kVertexPi;
  int horizon = 0;
  std::vector<Distribution> arc_marginals;
  std::vector<Distribution> vertex_marginals;
};

// Requires min degree >= 2 (so the process never dies) and horizon >= 1
// for kVertexPi, >= 0 otherwise; bipartite modes additionally need the
// view.
ProcessMarginals process_marginals(const ArcSpace& arcs, int horizon,
                                   StartMode mode,
                                   const BipartiteView* bv = nullptr);

// Per-step conditional entropies of the process (nats): element 0 is
// E[ln deg] for a vertex start or 0 for arc starts, element j is
// E[ln(deg-1)] under the marginal of the vertex governing the j-th
// following choice. Their sum is the conditional entropy of the walk given
// its start.
std::vector<double> process_entropy_terms(const ArcSpace& arcs,
                                          const ProcessMarginals& pm);

// Exact verification of the marginal claims: every arc marginal is uniform
// on its class (all arcs, or the alternating crossing classes) and every
// vertex marginal equals pi (side-restricted in bipartite modes). Rational
// equality — no tolerance.
struct StationarityCheck {
  bool exact = true;
  int bad_index = -1;       // first failing marginal, -1 if none
  std::string detail;
};

StationarityCheck check_stationarity(const ArcSpace& arcs,
                                     const ProcessMarginals& pm,
                                     const BipartiteView* bv = nullptr);

// Float tolerances: inequality chains may have true gap zero, so they get
// absolute slack; the chain-rule identity is pure summation and must agree
// far tighter.
inline constexpr double kChainTolerance = 1e-9;
inline constexpr double kChainRuleTolerance = 1e-12;

// One certified instance of an entropy argument: the walk-count expectation
// under the start distribution, the inequality chain
//   ln E[n] >= E[ln n] >= H >= ln(bound)
// and the per-step decomposition of H. All logarithms are natural.
struct EntropyAudit {
  StartMode mode = StartMode::kVertexPi;
  int horizon = 0;

  ProcessMarginals marginals;
  StationarityCheck stationarity;

  // entropy_terms[0] is E[ln d_v] (kVertexPi) or 0 (arc modes; the start
  // arc is conditioned away); entropy_terms[j] is E[ln(deg - 1)] over the
  // vertex governing the j-th following choice.
  std::vector<double> entropy_terms;
  double entropy = 0;

  Rational expected_count;  // exact E[n_horizon(start)]
  Rational bound;           // exact closed-form lower bound for this mode
  bool expectation_ok = false;  // expected_count >= bound, exact

  double log_expected = 0;  // ln E[n]
  double expected_log = 0;  // E[ln n]
  double log_bound = 0;

  double gaps[3] = {0, 0, 0};  // adjacent differences along the chain
  bool chain_ok = false;       // every gap >= -kChainTolerance

  // |H - H'| / max(1, |H|) where H' recomputes the total from the arc
  // marginals instead of the vertex marginals (chain-rule consistency).
  double chain_rule_residual = 0;

  bool ok() const {
    return stationarity.exact && expectation_ok && chain_ok &&
           chain_rule_residual <= kChainRuleTolerance;
  }
};

// Requires counts.horizon >= horizon and min degree >= 2. Horizon >= 1 for
// kVertexPi (an empty walk has no start-arc choice), >= 0 otherwise.
EntropyAudit conditional_entropy_chain(const ArcSpace& arcs,
                                       const WalkCountTable& counts,
                                       int horizon, StartMode mode,
                                       const BipartiteView* bv = nullptr);

// The closed-form expectation bound certified by the entropy argument:
//   kVertexPi:     d_bar (d_bar-1)^{h-1}          (h >= 1)
//   kArcUniform:   (d_bar-1)^h                    (h >= 0)
//   kArcUniformLR: (d_R-1)^{ceil(h/2)} (d_L-1)^{floor(h/2)}
//   kArcUniformRL: (d_L-1)^{ceil(h/2)} (d_R-1)^{floor(h/2)}
Rational expectation_bound(const ArcSpace& arcs, int horizon, StartMode mode,
                           const BipartiteView* bv = nullptr);

// Bundled per-index audits for a lemma: part (a) then part (b).
struct LemmaReport {
  std::vector<EntropyAudit> part_a;
  std::vector<EntropyAudit> part_b;
  bool ok = false;
};

// Average-degree lemma: part (a) audits E_pi[n_i(v)] >= d_bar(d_bar-1)^{i-1}
// for 1 <= i <= i_max, part (b) audits E[n_i(a)] >= (d_bar-1)^i for
// 0 <= i <= i_max under the uniform arc start.
LemmaReport verify_lemma_ahl(const ArcSpace& arcs,
                             const WalkCountTable& counts, int i_max);

// Bipartite lemma: part (a) audits E[n_{2i+1}(a)] over left-to-right arcs
// against (d_R-1)^{i+1}(d_L-1)^i, part (b) audits E[n_{2i}(a)] over
// right-to-left arcs against (d_R-1)^i(d_L-1)^i, each for 0 <= i <= i_max.
LemmaReport verify_lemma_hoory(const ArcSpace& arcs, const BipartiteView& bv,
                               const WalkCountTable& counts, int i_max);

// Direct two-sided evaluation of the Jensen steps the entropy arguments
// rely on, as (weighted mean of f at the degrees) minus (f at the average
// degree) for the three convex functions involved.
struct JensenRecord {
  std::string function_id;
  int i = 0;
  double lhs = 0;
  double rhs = 0;
  double gap = 0;
  bool ok = false;  // gap >= -kChainTolerance
};

std::vector<JensenRecord> jensen_certificates(const Graph& g, int i_max);

}  // namespace nrw

#endif
