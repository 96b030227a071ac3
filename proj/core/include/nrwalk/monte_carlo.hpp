#ifndef NRWALK_MONTE_CARLO_HPP
#define NRWALK_MONTE_CARLO_HPP

#include <cstdint>

#include "nrwalk/arc_space.hpp"
#include "nrwalk/entropy.hpp"

namespace nrw {

inline constexpr std::uint64_t kDefaultMcSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr long long kDefaultMcSamples = 1'000'000;

// Significance thresholds for the two checks: per-arc frequency z-scores
// and the entropy estimate.
inline constexpr double kFrequencySigmaLimit = 4.0;
inline constexpr double kEntropySigmaLimit = 3.0;

// Simulation cross-check of the walk process: samples walks with a seeded
// PRNG, compares per-step arc frequencies against the exact uniform
// marginals, and estimates the process entropy from per-walk surprisals.
struct MonteCarloReport {
  StartMode mode = StartMode::kArcUniform;
  int horizon = 0;
  std::uint64_t seed = 0;
  long long samples = 0;

  double max_abs_z = 0;  // worst per-step, per-arc frequency z-score
  int worst_step = -1;
  int worst_arc = -1;

  double entropy_exact = 0;     // from the conditional-entropy chain
  double entropy_estimate = 0;  // mean surprisal over sampled walks
  double entropy_std_error = 0;
  double entropy_z = 0;  // 0 when the std error is 0 (constant surprisal)

  bool frequencies_ok = false;  // max_abs_z <= kFrequencySigmaLimit
  bool entropy_ok = false;      // |entropy_z| <= kEntropySigmaLimit

  bool ok() const { return frequencies_ok && entropy_ok; }
};

// Requires min degree >= 2; bipartite modes need the view. Deterministic
// for a fixed seed: draws use the raw 64-bit stream reduced by modulus, so
// no standard-library distribution variability leaks in.
MonteCarloReport run_monte_carlo(const ArcSpace& arcs, int horizon,
                                 StartMode mode, std::uint64_t seed,
                                 long long samples,
                                 const BipartiteView* bv = nullptr);

}  // namespace nrw

#endif
