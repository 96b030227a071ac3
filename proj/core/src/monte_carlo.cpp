#include "nrwalk/monte_carlo.hpp"

#include <cmath>
#include <random>

#include "nrwalk/errors.hpp"

namespace nrw {

MonteCarloReport run_monte_carlo(const ArcSpace& arcs, int horizon,
                                 StartMode mode, std::uint64_t seed,
                                 long long samples,
                                 const BipartiteView* bv) {
  if (samples < 1) throw PreconditionError("need at least one sample");
  // Exact marginals double as the precondition check and provide the
  // reference entropy.
  const auto pm = process_marginals(arcs, horizon, mode, bv);
  const auto terms = process_entropy_terms(arcs, pm);

  MonteCarloReport rep;
  rep.mode = mode;
  rep.horizon = horizon;
  rep.seed = seed;
  rep.samples = samples;
  rep.entropy_exact = 0;
  for (double t : terms) rep.entropy_exact += t;

  const int na = arcs.num_arcs();
  const int steps = static_cast<int>(pm.arc_marginals.size());
  std::vector<std::vector<long long>> freq(
      static_cast<std::size_t>(steps),
      std::vector<long long>(static_cast<std::size_t>(na), 0));

  std::mt19937_64 rng(seed);
  // All index draws reduce the raw 64-bit stream by modulus: the bias is
  // immaterial at these support sizes and the sequence is identical on
  // every platform, which the determinism guarantee relies on.
  auto draw = [&rng](std::size_t k) {
    return static_cast<std::size_t>(rng() % k);
  };

  const std::vector<int>* start_class = nullptr;
  if (mode == StartMode::kArcUniformLR) start_class = &bv->arcs_lr;
  if (mode == StartMode::kArcUniformRL) start_class = &bv->arcs_rl;

  double sum = 0, sum_sq = 0;
  for (long long s = 0; s < samples; ++s) {
    double surprisal = 0;
    int current;
    int step = 0;
    if (mode == StartMode::kVertexPi) {
      // The tail of a uniform arc has law pi; the first walk arc is then a
      // fresh uniform choice out of that vertex.
      const int v = arcs.tail(static_cast<int>(draw(na)));
      const auto& out = arcs.out_arcs(v);
      current = out[draw(out.size())];
      surprisal += std::log(static_cast<double>(out.size()));
    } else if (start_class != nullptr) {
      current = (*start_class)[draw(start_class->size())];
    } else {
      current = static_cast<int>(draw(na));
    }
    ++freq[step][current];
    while (++step < steps) {
      const auto& succ = arcs.successors(current);
      current = succ[draw(succ.size())];
      surprisal += std::log(static_cast<double>(succ.size()));
      ++freq[step][current];
    }
    sum += surprisal;
    sum_sq += surprisal * surprisal;
  }

  // Frequency z-scores against the exact marginals (uniform on the class
  // carried by each step's exact distribution).
  const double n = static_cast<double>(samples);
  for (int j = 0; j < steps; ++j) {
    const auto& exact = pm.arc_marginals[j];
    for (int a = 0; a < na; ++a) {
      const double p = to_double(exact.probs[a]);
      if (p == 0) continue;  // off-class arcs are structurally unreachable
      const double sigma = std::sqrt(p * (1 - p) / n);
      // sigma can only vanish for a single-arc class (p = 1), where the
      // empirical count must be exact.
      const double z = sigma > 0 ? (freq[j][a] / n - p) / sigma
                                 : (freq[j][a] == samples ? 0.0 : HUGE_VAL);
      if (std::abs(z) > rep.max_abs_z) {
        rep.max_abs_z = std::abs(z);
        rep.worst_step = j;
        rep.worst_arc = a;
      }
    }
  }
  rep.frequencies_ok = rep.max_abs_z <= kFrequencySigmaLimit;

  rep.entropy_estimate = sum / n;
  const double variance =
      samples > 1 ? std::max(0.0, (sum_sq - n * rep.entropy_estimate *
                                                rep.entropy_estimate) /
                                      (n - 1))
                  : 0.0;
  rep.entropy_std_error = std::sqrt(variance / n);
  const double diff = rep.entropy_estimate - rep.entropy_exact;
  if (rep.entropy_std_error == 0) {
    rep.entropy_z = 0;
    rep.entropy_ok = std::abs(diff) <= kChainTolerance;
  } else {
    rep.entropy_z = diff / rep.entropy_std_error;
    rep.entropy_ok = std::abs(rep.entropy_z) <= kEntropySigmaLimit;
  }
  return rep;
}

}  // namespace nrw
