#include "prefixrl/shaper.hpp"

#include <cmath>
#include <stdexcept>

namespace prefixrl {

int PrefixStrategy::cut_tokens(const Rollout& rollout) const {
  switch (kind) {
    case PrefixStrategyKind::simple:
      return 0;
    case PrefixStrategyKind::shorten_fixed:
      return cut;
    case PrefixStrategyKind::shorten_partial:
      return static_cast<int>(std::floor(fraction * rollout.num_tokens()));
    case PrefixStrategyKind::shorten_prompt:
      return rollout.prompt_len;
  }
  return 0;
}

PrefixStrategy parse_prefix_strategy(const std::string& name) {
  PrefixStrategy s;
  if (name == "simple") s.kind = PrefixStrategyKind::simple;
  else if (name == "fixed") s.kind = PrefixStrategyKind::shorten_fixed;
  else if (name == "partial") s.kind = PrefixStrategyKind::shorten_partial;
  else if (name == "prompt") s.kind = PrefixStrategyKind::shorten_prompt;
  else throw std::invalid_argument("unknown prefix strategy: " + name);
  return s;
}

std::string to_string(PrefixStrategyKind kind) {
  switch (kind) {
    case PrefixStrategyKind::simple: return "simple";
    case PrefixStrategyKind::shorten_fixed: return "fixed";
    case PrefixStrategyKind::shorten_partial: return "partial";
    case PrefixStrategyKind::shorten_prompt: return "prompt";
  }
  return "?";
}

std::optional<PrefixSpec> build_good_prefix(const Rollout& rollout,
                                            std::optional<int> first_error,
                                            PrefixStrategy strategy) {
  if (rollout.correct)
    throw std::invalid_argument("build_good_prefix: rollout is correct");
  if (!first_error.has_value()) return std::nullopt;
  const int m_err = *first_error;
  if (m_err < 1 || m_err > rollout.num_steps())
    throw std::invalid_argument("build_good_prefix: first error step out of range");
  PrefixSpec spec;
  spec.good_prefix_end = rollout.step_begin(m_err) - 1;
  spec.reward_prefix_end = 0;
  spec.first_error_step = m_err;
  spec.strategy = strategy;
  return spec;
}

PrefixSpec apply_strategy(PrefixSpec spec, const Rollout& rollout) {
  const int cut = spec.strategy.cut_tokens(rollout);
  spec.reward_prefix_end = std::max(0, spec.good_prefix_end - cut);
  return spec;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "sparse") return Scheme::sparse;
  if (name == "vppo") return Scheme::vppo;
  if (name == "mixed") return Scheme::mixed;
  if (name == "rts") return Scheme::rts;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::sparse: return "sparse";
    case Scheme::vppo: return "vppo";
    case Scheme::mixed: return "mixed";
    case Scheme::rts: return "rts";
  }
  return "?";
}

void SchemeConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("scheme config: alpha outside [0,1]");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("scheme config: lambda outside [0,1]");
}

namespace {

double mean(const StepScores& scores) {
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

}  // namespace

std::vector<double> token_rewards(const Rollout& rollout,
                                  const std::optional<PrefixSpec>& prefix,
                                  const SchemeConfig& cfg,
                                  const StepScores* step_scores) {
  cfg.validate();
  std::vector<double> rewards(rollout.num_tokens(), 0.0);
  const int last = rollout.num_tokens() - 1;

  switch (cfg.scheme) {
    case Scheme::sparse:
      if (rollout.correct) rewards[last] = 1.0;
      break;

    case Scheme::vppo:
      if (rollout.correct) {
        rewards[last] = 1.0;
      } else if (prefix.has_value()) {
        // Bonus lands on the last token of the reward prefix; an empty reward
        // prefix leaves the whole vector zero rather than moving the bonus.
        if (auto lt = last_token_index(prefix->reward_prefix()); lt.has_value())
          rewards[*lt - 1] = cfg.alpha;
      }
      break;

    case Scheme::mixed: {
      if (step_scores == nullptr)
        throw std::invalid_argument("mixed scheme requires step_scores");
      validate_step_scores(*step_scores, rollout.num_steps());
      const double r_corr = rollout.correct ? 1.0 : 0.0;
      rewards[last] = cfg.lambda * mean(*step_scores) + (1.0 - cfg.lambda) * r_corr;
      break;
    }

    case Scheme::rts:
      if (rollout.correct) {
        rewards[last] = 1.0;
      } else if (prefix.has_value()) {
        const double correct_steps = static_cast<double>(prefix->first_error_step - 1);
        const double rts = correct_steps / static_cast<double>(rollout.num_steps());
        rewards[last] = 1.0 / (1.0 + std::exp(cfg.beta * rts + cfg.gamma));
      }
      // No localization on an incorrect rollout: all-zero rewards.
      break;
  }
  return rewards;
}

}  // namespace prefixrl
