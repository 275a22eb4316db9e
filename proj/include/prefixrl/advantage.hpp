#pragma once

#include <optional>
#include <vector>

#include "prefixrl/rollout.hpp"
#include "prefixrl/shaper.hpp"

namespace prefixrl {

// Per-token Monte-Carlo advantages for one rollout group, plus the response
// means and group statistics the normalization used.
struct AdvantageTensor {
  std::vector<std::vector<double>> token_values;  // [rollout][token]
  std::vector<double> response_means;             // A_i, one per rollout
  double group_mean = 0.0;
  std::optional<double> group_std;                // set when std normalization ran
};

struct NormalizationConfig {
  bool use_std = false;            // divide by population std of response means
  bool use_relu_on_prefix = false; // clamp reward-prefix tokens of incorrect rollouts at 0
  double std_floor = 1e-8;         // below this the group carries no signal: emit zeros
};

// The two facts about a rollout the normalizer needs: correctness, and how
// many leading tokens lie inside its reward prefix (0 for correct rollouts
// and for schemes without a prefix bonus).
struct RolloutShaping {
  bool correct = false;
  int reward_prefix_len = 0;
};

// Undiscounted return-to-go: A_{i,t} = sum of rewards at positions >= t.
// Reproduces the per-scheme case tables directly: a terminal-only reward
// spreads to every token, a prefix bonus covers exactly the reward prefix.
AdvantageTensor raw_advantages(const RolloutGroup& group,
                               const std::vector<std::vector<double>>& rewards);

// Group-relative normalization: subtract the mean of the response means from
// every token; optionally divide by their population std (all-zero below the
// floor); optionally ReLU only the reward-prefix tokens of incorrect rollouts.
AdvantageTensor normalize(AdvantageTensor tensor, const NormalizationConfig& cfg,
                          const std::vector<RolloutShaping>& shaping);

// Min/max of the normalized advantage over a token region; zeros for an
// empty region.
struct RegionSigns {
  double min = 0.0;
  double max = 0.0;
  bool empty = true;
};

// Two-rollout diagnostic comparing the sparse scheme against a prefix-bonus
// scheme on the canonical exploration/exploitation layouts: one correct and
// one incorrect rollout, the incorrect one carrying a localized first error.
struct SignPatternReport {
  RegionSigns sparse_correct, sparse_prefix, sparse_suffix;
  RegionSigns shaped_correct, shaped_prefix, shaped_suffix;
  bool sparse_conflict_on_prefix = false;  // sparse pushes the good prefix down
                                           // while pushing the correct rollout up
  bool shaped_prefix_nonnegative = false;
  bool suffix_negative_both = false;
  bool degenerate = false;  // no incorrect rollout in the group
};

SignPatternReport scenario_sign_check(const RolloutGroup& group,
                                      std::optional<int> first_error_of_incorrect,
                                      const SchemeConfig& shaped_cfg,
                                      const NormalizationConfig& shaped_norm,
                                      PrefixStrategy strategy = {PrefixStrategyKind::simple});

}  // namespace prefixrl
