#pragma once

#include <vector>

namespace prefixrl {

// Softmax policy over a small enumerated state space; logits are row-major
// (state, action).
struct TabularPolicy {
  int n_states = 0;
  int n_actions = 0;
  std::vector<double> logits;

  TabularPolicy() = default;
  TabularPolicy(int states, int actions)
      : n_states(states), n_actions(actions),
        logits(static_cast<std::size_t>(states) * actions, 0.0) {}

  double& logit(int s, int a) { return logits[static_cast<std::size_t>(s) * n_actions + a]; }
  double logit(int s, int a) const { return logits[static_cast<std::size_t>(s) * n_actions + a]; }

  // Per-state probabilities; strictly positive, sum to 1.
  std::vector<double> probs(int s) const;
  double prob(int s, int a) const;
};

// One generated token: the (state, action) pair it corresponds to, the
// probability the sampling policy assigned it, and its normalized advantage.
struct TokenSample {
  int state = 0;
  int action = 0;
  double old_prob = 1.0;
  double advantage = 0.0;
};

using RolloutSample = std::vector<TokenSample>;

struct QuestionSample {
  std::vector<RolloutSample> rollouts;
};

struct BatchSample {
  std::vector<QuestionSample> questions;
};

inline constexpr double kDefaultClipEps = 0.2;

// Clipped surrogate objective: questions weighted equally, tokens within a
// question weighted by 1 / (total tokens of its group).
double objective(const BatchSample& batch, const TabularPolicy& policy,
                 double clip_eps = kDefaultClipEps);

// Exact gradient of the objective w.r.t. the logits. At the clip kink the
// unclipped branch's derivative is taken; inside the clipped-and-smaller
// branch the term is constant in the logits so it contributes nothing.
std::vector<double> gradient(const BatchSample& batch, const TabularPolicy& policy,
                             double clip_eps = kDefaultClipEps);

}  // namespace prefixrl
