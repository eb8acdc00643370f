#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gossip/channel.hpp"
#include "gossip/opinion.hpp"
#include "gossip/random_stream.hpp"
#include "gossip/scheduler.hpp"

namespace gossip {

// (e*pi/8) * (1 + delta)^2 at delta = 0.1: the smallest constant for
// which one k-majority round with k = c/eps^2 amplifies a bias s by a
// factor 1 + delta for all s <= n / (2 sqrt(c)).
inline constexpr double kDriftDelta = 0.1;
inline constexpr double kDefaultDriftC = 1.2916348011793768;

// Constants of the two-phase Majority Protocol. The paper fixes them
// only up to Theta(.); the defaults here make the drift bound exact
// (c), keep the phase-2 per-node failure probability at n^-2
// (c4 = 5 / c3^2), and give phase 1 comfortable length (alpha).
struct MajorityParams {
  double c = kDefaultDriftC;   // phase-1 sample constant, k1 = next odd >= c/eps^2
  double alpha = 4.0;          // phase-1 length: ceil(alpha * log2 n) rounds
  double c3 = 1.0 / 200.0;     // target linear-bias fraction (bias >= c3*n/2)
  double c4 = 200000.0;        // phase-2 sample constant, k2 = ceil(c4 eps^-2 ln n)
  bool allow_even_k = false;   // even k with uniform random tie breaking

  std::optional<std::int64_t> k1_override;
  std::optional<std::int64_t> k2_override;
  std::optional<std::int64_t> rounds1_override;

  std::int64_t k1(double epsilon) const;
  std::int64_t k2(double epsilon, std::size_t n) const;  // >= k1
  std::int64_t rounds1(std::size_t n) const;             // >= 1
};

// NoisyBroadcast: phase-1 length and decision threshold, then the
// Majority Protocol on the guesses.
struct BroadcastParams {
  double c_b = 16.0;  // phase-1 pulls per node: ceil(c_b * eps^-2 * n * ln n)
  MajorityParams majority;

  std::int64_t phase1_pulls(std::size_t n, double epsilon) const;
  // Guess 1 iff the fraction of received ones is at least
  // 1/2 - eps*(1 - 1/(2n)).
  double threshold(std::size_t n, double epsilon) const;
};

// How one k-majority update draws its randomness. All three produce the
// same distribution over next configurations; they differ in cost and
// in what they can track.
//  - Explicit: every pull drawn individually (supports transcripts and
//    infection, O(n k) per round).
//  - Multiset: per node, the multiset of pulled targets is drawn as a
//    multinomial and noise flips as per-target binomials (supports
//    infection, O(n^2) per round; used when k is large).
//  - Marginal: each node adopts 0 with the exact probability
//    majority_win_prob(k, observe_probability(bias, n)), O(n) per round
//    (no infection tracking).
// Auto picks Marginal without infection tracking, and Explicit or
// Multiset (large k) with it.
enum class SamplingMode { Auto, Explicit, Multiset, Marginal };

struct StepOptions {
  SamplingMode mode = SamplingMode::Auto;
  InfectionState* infection = nullptr;
};

// One synchronous k-majority round: every node samples k displayed
// opinions through the channel (uniform targets, self included, with
// replacement) and adopts the majority of its sample. k must be odd
// unless allow_even_k, in which case ties break uniformly at random.
OpinionVector k_majority_step(const OpinionVector& config, std::int64_t k,
                              const NoiseChannel& ch, RandomStream& rng,
                              const MajorityParams& params = {},
                              const StepOptions& options = {});

// One simulation replica's result.
struct RunOutcome {
  bool converged = false;                 // all n nodes agree at the end
  std::optional<int> final_value;         // the shared bit when converged
  std::int64_t rounds_used = 0;           // opinion-update steps executed
  std::vector<std::int64_t> bias_trajectory;  // length rounds_used + 1
  bool valid = false;                     // final value appeared in the input
  std::optional<std::vector<std::int64_t>> infected_trajectory;
  std::int64_t pull_rounds = 0;           // 1-pull-equivalent round count
  std::optional<bool> soak_held;          // unanimity survived the soak phase
  std::optional<std::int64_t> phase1_correct;  // broadcast: correct guessers
};

struct RunOptions {
  SamplingMode mode = SamplingMode::Auto;
  InfectionState* infection = nullptr;
  bool soak = false;                   // extra 10*rounds1 k2-strength rounds
  bool one_pull_emulation = false;     // report k-pull rounds as k 1-pull rounds
};

// Two-phase Majority Protocol: rounds1 = ceil(alpha log2 n) rounds of
// k1-majority followed by one round of k2-majority.
RunOutcome run_majority_protocol(const NoiseChannel& ch, const OpinionVector& initial,
                                 const MajorityParams& params, RandomStream& rng,
                                 const RunOptions& options = {});

// NoisyBroadcast. Phase 1: the source displays its bit and every other
// node displays 0; every node accumulates phase1_pulls pulled bits and
// guesses 1 iff its ones-fraction clears the threshold (the source
// keeps its input). Phase 2: the Majority Protocol on the guesses.
// converged means unanimity on the source bit; valid means the final
// value equals the source bit. bias_trajectory[0] is the bias of the
// phase-1 display configuration and bias_trajectory[1] that of the
// guess vector. The source node is node 1 (index 0).
RunOutcome run_noisy_broadcast(std::size_t n, const NoiseChannel& ch, int source_bit,
                               const BroadcastParams& params, RandomStream& rng,
                               const RunOptions& options = {});

// One-round deterministic consensus fixture for the general PULL model:
// every node copies node 1's opinion. Rejects uniform models, where no
// node can name the partner to pull from.
OpinionVector baseline_copy_node_one(const OpinionVector& config, ModelKind model,
                                     InfectionState* infection = nullptr);

}  // namespace gossip
