#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prefixrl/rng.hpp"

namespace prefixrl {

// Binary reasoning tree of depth H with a unique correct trajectory. States
// off the correct path never receive score updates under either reward
// scheme, so they keep their uniform policy forever and are never stored:
// the whole simulation is O(H) memory.
struct TreeMdp {
  int depth = 1;
  std::vector<int> correct_actions;  // a*_h in {0,1}, one per layer

  static TreeMdp with_actions(std::vector<int> actions);
  static TreeMdp random(int depth, Xoshiro256ss& rng);

  void validate() const;
};

enum class TreeScheme { sparse, dense };

std::string to_string(TreeScheme scheme);

// Which depths of an incorrect rollout receive the prefix bonus.
//   matched_prefix:      depths h <= h*   (the Monte-Carlo return-to-go of the
//                        bonus placed at the end of the matched prefix)
//   through_first_error: depths h <= h*+1 (the per-depth counter that pays a
//                        layer whenever the rollout matched everything above it)
// The two differ by one depth; matched_prefix is the default.
enum class DenseCreditRule { matched_prefix, through_first_error };

// KL-regularized exponentiated-update policy restricted to the correct-path
// states: pi_t(a|s_h) is proportional to exp(eta * S(s_h, a)) with uniform
// initialization, where S accumulates the Monte-Carlo Q estimates.
struct SimPolicyState {
  double eta = 0.5;
  std::vector<std::array<double, 2>> scores;  // per depth, per action
  long rounds = 0;
  long n_correct = 0;                // correct rollouts observed
  std::vector<long> prefix_hits;     // per depth: incorrect rollouts credited there

  SimPolicyState(int depth, double eta_in);

  int depth() const { return static_cast<int>(scores.size()); }
  // pi_t(a*_h | s_h) for 1-based layer h.
  double correct_action_prob(const TreeMdp& mdp, int layer) const;
  // log prod_h pi_t(a*_h | s_h), accumulated in log space.
  double log_success_probability(const TreeMdp& mdp) const;
  double success_probability(const TreeMdp& mdp) const;
};

struct TreeRollout {
  std::vector<int> actions;
  bool correct = false;
  int match_depth = 0;  // h*: longest prefix that coincides with the correct path
};

// Samples one full trajectory. Off-path states are uniform by construction,
// so their actions are fair coin flips.
TreeRollout sample_rollout(const TreeMdp& mdp, const SimPolicyState& policy,
                           Xoshiro256ss& rng);

struct TreeUpdateConfig {
  TreeScheme scheme = TreeScheme::dense;
  double alpha = 0.5;
  DenseCreditRule credit = DenseCreditRule::matched_prefix;
};

// Applies one Monte-Carlo update. A correct rollout adds 1 to every layer's
// correct action; under the dense scheme an incorrect rollout additionally
// adds alpha to the layers selected by the credit rule.
void apply_update(SimPolicyState& policy, const TreeMdp& mdp,
                  const TreeRollout& rollout, const TreeUpdateConfig& cfg);

struct SimRunConfig {
  int depth = 4;
  double eta = 0.5;
  double alpha = 0.5;
  double epsilon = 0.1;  // must lie in (0, 1/2)
  TreeScheme scheme = TreeScheme::dense;
  DenseCreditRule credit = DenseCreditRule::matched_prefix;
  long budget = 10'000'000;  // rollout cap per run; exceeding it flags truncation

  void validate() const;
};

struct ComplexityRecord {
  TreeScheme scheme = TreeScheme::dense;
  int depth = 0;
  double eta = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  long n_star = 0;     // rollouts consumed until epsilon-optimality
  bool truncated = false;
};

// Loops rollout -> update until the exact success probability reaches
// 1 - epsilon, checked in log space after every update.
ComplexityRecord run_to_epsilon(const SimRunConfig& cfg, std::uint64_t seed);

struct ProbeResult {
  bool pass = false;         // any of the K direct attempts correct
  bool prefix_pass = false;  // any continuation from the best failed prefix correct
  int restart_depth = 0;     // h* the restart used (0 = root)
};

inline constexpr int kDefaultProbeAttempts = 32;

// Pass@K versus prefix-restart probe: sample K rollouts; if all fail, restart
// K times from the deepest correct-path prefix observed among the failures.
// When a direct attempt succeeds the restart is not invoked and both
// indicators are positive. The policy is not updated.
ProbeResult prefix_restart_probe(const TreeMdp& mdp, const SimPolicyState& policy,
                                 int attempts, Xoshiro256ss& rng);

}  // namespace prefixrl
