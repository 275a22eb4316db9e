#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prefixrl/localizer.hpp"
#include "prefixrl/rollout.hpp"

namespace prefixrl {

// How the reward prefix is carved out of the good prefix. The shorten
// variants trim a cut length c from the tail of the good prefix, leaving an
// unrewarded buffer that removes the incentive to inflate step counts.
enum class PrefixStrategyKind {
  simple,           // reward the whole good prefix
  shorten_fixed,    // c = fixed token count
  shorten_partial,  // c = floor(fraction * |tokens|)
  shorten_prompt,   // c = prompt length
};

struct PrefixStrategy {
  PrefixStrategyKind kind = PrefixStrategyKind::shorten_prompt;
  int cut = 200;           // shorten_fixed
  double fraction = 0.1;   // shorten_partial

  // Cut length in tokens for a concrete rollout.
  int cut_tokens(const Rollout& rollout) const;
};

PrefixStrategy parse_prefix_strategy(const std::string& name);
std::string to_string(PrefixStrategyKind kind);

// Token-level prefix pair for an incorrect rollout: the good prefix GP ends
// just before the first incorrect step, and the reward prefix RP is a prefix
// of GP whose last token carries the bonus reward. Ends are token counts
// (0 = empty prefix).
struct PrefixSpec {
  int good_prefix_end = 0;
  int reward_prefix_end = 0;
  int first_error_step = 1;  // the localized step index this spec was built from
  PrefixStrategy strategy;

  TokenRange reward_prefix() const { return {1, reward_prefix_end + 1}; }
};

// Builds the good prefix of an incorrect rollout from the localized first
// error. Returns nullopt when the localizer found no error: that rollout is
// shaped with all-zero rewards so the undetected mistake is never reinforced.
std::optional<PrefixSpec> build_good_prefix(const Rollout& rollout,
                                            std::optional<int> first_error,
                                            PrefixStrategy strategy = {});

// Fills reward_prefix_end according to the carried strategy; clamps at zero.
PrefixSpec apply_strategy(PrefixSpec spec, const Rollout& rollout);

enum class Scheme { sparse, vppo, mixed, rts };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);

struct SchemeConfig {
  Scheme scheme = Scheme::vppo;
  double alpha = 0.5;    // vppo: bonus on the last reward-prefix token
  double lambda = 0.8;   // mixed: weight of the mean step score
  double beta = -10.0;   // rts sigmoid slope
  double gamma = 20.0;   // rts sigmoid offset

  void validate() const;
};

// Per-token reward vector for one rollout. Sparse/vppo place at most one
// nonzero entry (terminal 1 or prefix alpha); mixed/rts place their scalar on
// the terminal token only.
std::vector<double> token_rewards(const Rollout& rollout,
                                  const std::optional<PrefixSpec>& prefix,
                                  const SchemeConfig& cfg,
                                  const StepScores* step_scores = nullptr);

}  // namespace prefixrl
