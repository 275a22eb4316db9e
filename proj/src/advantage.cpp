#include "prefixrl/advantage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prefixrl {

AdvantageTensor raw_advantages(const RolloutGroup& group,
                               const std::vector<std::vector<double>>& rewards) {
  if (rewards.size() != group.rollouts.size())
    throw std::invalid_argument("raw_advantages: rewards/group size mismatch");
  AdvantageTensor tensor;
  tensor.token_values.resize(rewards.size());
  tensor.response_means.resize(rewards.size());
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    const std::vector<double>& r = rewards[i];
    if (static_cast<int>(r.size()) != group.rollouts[i].num_tokens())
      throw std::invalid_argument("raw_advantages: reward length mismatch");
    std::vector<double>& adv = tensor.token_values[i];
    adv.resize(r.size());
    double suffix = 0.0;
    for (std::size_t t = r.size(); t-- > 0;) {
      suffix += r[t];
      adv[t] = suffix;
    }
    double sum = 0.0;
    for (double a : adv) sum += a;
    tensor.response_means[i] = sum / static_cast<double>(adv.size());
  }
  return tensor;
}

AdvantageTensor normalize(AdvantageTensor tensor, const NormalizationConfig& cfg,
                          const std::vector<RolloutShaping>& shaping) {
  const std::size_t g = tensor.token_values.size();
  if (g < 2) throw std::invalid_argument("normalize: group size must be >= 2");
  if (shaping.size() != g)
    throw std::invalid_argument("normalize: shaping/group size mismatch");

  double mean = 0.0;
  for (double m : tensor.response_means) mean += m;
  mean /= static_cast<double>(g);
  tensor.group_mean = mean;

  if (cfg.use_std) {
    double var = 0.0;
    for (double m : tensor.response_means) var += (m - mean) * (m - mean);
    const double std_dev = std::sqrt(var / static_cast<double>(g));
    tensor.group_std = std_dev;
    if (std_dev < cfg.std_floor) {
      // Uniform outcomes carry no relative signal.
      for (auto& adv : tensor.token_values)
        std::fill(adv.begin(), adv.end(), 0.0);
      return tensor;
    }
    for (auto& adv : tensor.token_values)
      for (double& a : adv) a = (a - mean) / std_dev;
  } else {
    for (auto& adv : tensor.token_values)
      for (double& a : adv) a -= mean;
  }

  if (cfg.use_relu_on_prefix) {
    for (std::size_t i = 0; i < g; ++i) {
      if (shaping[i].correct) continue;
      std::vector<double>& adv = tensor.token_values[i];
      const int prefix_len = std::min<int>(shaping[i].reward_prefix_len,
                                           static_cast<int>(adv.size()));
      for (int t = 0; t < prefix_len; ++t) adv[t] = std::max(adv[t], 0.0);
    }
  }
  return tensor;
}

namespace {

RegionSigns region_signs(const std::vector<double>& adv, int begin, int end) {
  RegionSigns s;
  begin = std::max(begin, 0);
  end = std::min<int>(end, static_cast<int>(adv.size()));
  if (begin >= end) return s;
  s.empty = false;
  s.min = adv[begin];
  s.max = adv[begin];
  for (int t = begin + 1; t < end; ++t) {
    s.min = std::min(s.min, adv[t]);
    s.max = std::max(s.max, adv[t]);
  }
  return s;
}

}  // namespace

SignPatternReport scenario_sign_check(const RolloutGroup& group,
                                      std::optional<int> first_error_of_incorrect,
                                      const SchemeConfig& shaped_cfg,
                                      const NormalizationConfig& shaped_norm,
                                      PrefixStrategy strategy) {
  group.validate();
  if (group.size() != 2)
    throw std::invalid_argument("scenario_sign_check: needs exactly 2 rollouts");

  SignPatternReport report;
  int correct_idx = -1, incorrect_idx = -1;
  for (int i = 0; i < 2; ++i)
    (group.rollouts[i].correct ? correct_idx : incorrect_idx) = i;
  if (correct_idx < 0 || incorrect_idx < 0) {
    report.degenerate = true;
    return report;
  }

  const Rollout& bad = group.rollouts[incorrect_idx];
  std::optional<PrefixSpec> spec =
      build_good_prefix(bad, first_error_of_incorrect, strategy);
  if (spec.has_value()) *spec = apply_strategy(*spec, bad);
  const int rp_end = spec ? spec->reward_prefix_end : 0;
  const int gp_end = spec ? spec->good_prefix_end : 0;

  std::vector<RolloutShaping> shaping(2);
  shaping[correct_idx] = {true, 0};
  shaping[incorrect_idx] = {false, rp_end};

  const auto advantages = [&](const SchemeConfig& cfg, const NormalizationConfig& norm) {
    std::vector<std::vector<double>> rewards(2);
    for (int i = 0; i < 2; ++i) {
      const bool is_bad = i == incorrect_idx;
      rewards[i] = token_rewards(group.rollouts[i],
                                 is_bad ? spec : std::nullopt, cfg);
    }
    return normalize(raw_advantages(group, rewards), norm, shaping);
  };

  // Baseline: sparse scheme with the conventional std normalization.
  SchemeConfig sparse_cfg;
  sparse_cfg.scheme = Scheme::sparse;
  NormalizationConfig sparse_norm;
  sparse_norm.use_std = true;
  const AdvantageTensor sparse = advantages(sparse_cfg, sparse_norm);
  const AdvantageTensor shaped = advantages(shaped_cfg, shaped_norm);

  const auto& sparse_bad = sparse.token_values[incorrect_idx];
  const auto& shaped_bad = shaped.token_values[incorrect_idx];
  report.sparse_correct = region_signs(sparse.token_values[correct_idx], 0,
                                       group.rollouts[correct_idx].num_tokens());
  report.shaped_correct = region_signs(shaped.token_values[correct_idx], 0,
                                       group.rollouts[correct_idx].num_tokens());
  report.sparse_prefix = region_signs(sparse_bad, 0, rp_end);
  report.shaped_prefix = region_signs(shaped_bad, 0, rp_end);
  report.sparse_suffix = region_signs(sparse_bad, gp_end, bad.num_tokens());
  report.shaped_suffix = region_signs(shaped_bad, gp_end, bad.num_tokens());

  report.sparse_conflict_on_prefix = !report.sparse_prefix.empty &&
                                     report.sparse_prefix.max < 0.0 &&
                                     report.sparse_correct.min > 0.0;
  report.shaped_prefix_nonnegative =
      !report.shaped_prefix.empty && report.shaped_prefix.min >= 0.0;
  report.suffix_negative_both = !report.sparse_suffix.empty &&
                                report.sparse_suffix.max < 0.0 &&
                                report.shaped_suffix.max < 0.0;
  return report;
}

}  // namespace prefixrl
