#include "prefixrl/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prefixrl {

std::vector<double> TabularPolicy::probs(int s) const {
  std::vector<double> p(n_actions);
  double max_logit = logit(s, 0);
  for (int a = 1; a < n_actions; ++a) max_logit = std::max(max_logit, logit(s, a));
  double sum = 0.0;
  for (int a = 0; a < n_actions; ++a) {
    p[a] = std::exp(logit(s, a) - max_logit);
    sum += p[a];
  }
  for (double& v : p) v /= sum;
  return p;
}

double TabularPolicy::prob(int s, int a) const { return probs(s)[a]; }

namespace {

void check_inputs(const BatchSample& batch, const TabularPolicy& policy,
                  double clip_eps) {
  if (clip_eps <= 0.0) throw std::invalid_argument("surrogate: clip_eps must be > 0");
  if (batch.questions.empty()) throw std::invalid_argument("surrogate: empty batch");
  for (const QuestionSample& q : batch.questions) {
    for (const RolloutSample& roll : q.rollouts) {
      for (const TokenSample& t : roll) {
        if (t.old_prob <= 0.0)
          throw std::invalid_argument("surrogate: old_prob must be positive");
        if (t.state < 0 || t.state >= policy.n_states || t.action < 0 ||
            t.action >= policy.n_actions)
          throw std::invalid_argument("surrogate: state/action out of range");
      }
    }
  }
}

std::size_t question_tokens(const QuestionSample& q) {
  std::size_t n = 0;
  for (const RolloutSample& roll : q.rollouts) n += roll.size();
  return n;
}

}  // namespace

double objective(const BatchSample& batch, const TabularPolicy& policy,
                 double clip_eps) {
  check_inputs(batch, policy, clip_eps);
  double total = 0.0;
  for (const QuestionSample& q : batch.questions) {
    const std::size_t n_tokens = question_tokens(q);
    if (n_tokens == 0) continue;
    double q_sum = 0.0;
    for (const RolloutSample& roll : q.rollouts) {
      for (const TokenSample& t : roll) {
        const double ratio = policy.prob(t.state, t.action) / t.old_prob;
        const double clipped = std::clamp(ratio, 1.0 - clip_eps, 1.0 + clip_eps);
        q_sum += std::min(ratio * t.advantage, clipped * t.advantage);
      }
    }
    total += q_sum / static_cast<double>(n_tokens);
  }
  return total / static_cast<double>(batch.questions.size());
}

std::vector<double> gradient(const BatchSample& batch, const TabularPolicy& policy,
                             double clip_eps) {
  check_inputs(batch, policy, clip_eps);
  std::vector<double> grad(policy.logits.size(), 0.0);
  const double question_weight = 1.0 / static_cast<double>(batch.questions.size());
  for (const QuestionSample& q : batch.questions) {
    const std::size_t n_tokens = question_tokens(q);
    if (n_tokens == 0) continue;
    const double weight = question_weight / static_cast<double>(n_tokens);
    for (const RolloutSample& roll : q.rollouts) {
      for (const TokenSample& t : roll) {
        const std::vector<double> p = policy.probs(t.state);
        const double ratio = p[t.action] / t.old_prob;
        const double clipped = std::clamp(ratio, 1.0 - clip_eps, 1.0 + clip_eps);
        // The unclipped branch is active when it attains the min (ties
        // included); otherwise the clipped branch is a constant.
        if (ratio * t.advantage > clipped * t.advantage) continue;
        const double coef = weight * t.advantage * p[t.action] / t.old_prob;
        double* row = grad.data() + static_cast<std::size_t>(t.state) * policy.n_actions;
        for (int b = 0; b < policy.n_actions; ++b) {
          const double indicator = b == t.action ? 1.0 : 0.0;
          row[b] += coef * (indicator - p[b]);
        }
      }
    }
  }
  return grad;
}

}  // namespace prefixrl
