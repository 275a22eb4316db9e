#include "prefixrl/tree_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prefixrl {

namespace {

// log(sigmoid(z)) without overflow on either tail.
double log_sigmoid(double z) {
  if (z >= 0.0) return -std::log1p(std::exp(-z));
  return z - std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

TreeMdp TreeMdp::with_actions(std::vector<int> actions) {
  TreeMdp mdp;
  mdp.depth = static_cast<int>(actions.size());
  mdp.correct_actions = std::move(actions);
  mdp.validate();
  return mdp;
}

TreeMdp TreeMdp::random(int depth, Xoshiro256ss& rng) {
  std::vector<int> actions(depth);
  for (int& a : actions) a = static_cast<int>(rng.next_u64() & 1ULL);
  return with_actions(std::move(actions));
}

void TreeMdp::validate() const {
  if (depth < 1) throw std::invalid_argument("tree mdp: depth must be >= 1");
  if (static_cast<int>(correct_actions.size()) != depth)
    throw std::invalid_argument("tree mdp: correct path length mismatch");
  for (int a : correct_actions)
    if (a != 0 && a != 1)
      throw std::invalid_argument("tree mdp: actions must be 0 or 1");
}

SimPolicyState::SimPolicyState(int depth, double eta_in)
    : eta(eta_in), scores(depth, {0.0, 0.0}), prefix_hits(depth, 0) {
  if (depth < 1) throw std::invalid_argument("policy state: depth must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("policy state: eta must be > 0");
}

double SimPolicyState::correct_action_prob(const TreeMdp& mdp, int layer) const {
  const int star = mdp.correct_actions[layer - 1];
  const auto& s = scores[layer - 1];
  return sigmoid(eta * (s[star] - s[1 - star]));
}

double SimPolicyState::log_success_probability(const TreeMdp& mdp) const {
  double log_p = 0.0;
  for (int h = 1; h <= depth(); ++h) {
    const int star = mdp.correct_actions[h - 1];
    const auto& s = scores[h - 1];
    log_p += log_sigmoid(eta * (s[star] - s[1 - star]));
  }
  return log_p;
}

double SimPolicyState::success_probability(const TreeMdp& mdp) const {
  return std::exp(log_success_probability(mdp));
}

TreeRollout sample_rollout(const TreeMdp& mdp, const SimPolicyState& policy,
                           Xoshiro256ss& rng) {
  TreeRollout result;
  result.actions.resize(mdp.depth);
  bool on_path = true;
  for (int h = 1; h <= mdp.depth; ++h) {
    const int star = mdp.correct_actions[h - 1];
    int action;
    if (on_path) {
      const double p = policy.correct_action_prob(mdp, h);
      action = rng.bernoulli(p) ? star : 1 - star;
      if (action == star) {
        result.match_depth = h;
      } else {
        on_path = false;
      }
    } else {
      action = static_cast<int>(rng.next_u64() & 1ULL);
    }
    result.actions[h - 1] = action;
  }
  result.correct = result.match_depth == mdp.depth;
  return result;
}

void apply_update(SimPolicyState& policy, const TreeMdp& mdp,
                  const TreeRollout& rollout, const TreeUpdateConfig& cfg) {
  ++policy.rounds;
  if (rollout.correct) {
    ++policy.n_correct;
    for (int h = 0; h < mdp.depth; ++h)
      policy.scores[h][mdp.correct_actions[h]] += 1.0;
    return;
  }
  if (cfg.scheme != TreeScheme::dense) return;
  int credited = rollout.match_depth;
  if (cfg.credit == DenseCreditRule::through_first_error)
    credited = std::min(credited + 1, mdp.depth);
  for (int h = 0; h < credited; ++h) {
    policy.scores[h][mdp.correct_actions[h]] += cfg.alpha;
    ++policy.prefix_hits[h];
  }
}

void SimRunConfig::validate() const {
  if (depth < 1) throw std::invalid_argument("simulate: depth must be >= 1");
  if (!(eta > 0.0)) throw std::invalid_argument("simulate: eta must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("simulate: alpha must be > 0");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("simulate: epsilon must lie in (0, 1/2)");
  if (budget < 1) throw std::invalid_argument("simulate: budget must be >= 1");
}

ComplexityRecord run_to_epsilon(const SimRunConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Xoshiro256ss rng(seed);
  const TreeMdp mdp = TreeMdp::random(cfg.depth, rng);
  SimPolicyState policy(cfg.depth, cfg.eta);
  const TreeUpdateConfig update_cfg{cfg.scheme, cfg.alpha, cfg.credit};
  const double log_target = std::log1p(-cfg.epsilon);

  ComplexityRecord record;
  record.scheme = cfg.scheme;
  record.depth = cfg.depth;
  record.eta = cfg.eta;
  record.alpha = cfg.alpha;
  record.epsilon = cfg.epsilon;
  record.seed = seed;

  for (long n = 1; n <= cfg.budget; ++n) {
    const TreeRollout rollout = sample_rollout(mdp, policy, rng);
    apply_update(policy, mdp, rollout, update_cfg);
    if (policy.log_success_probability(mdp) >= log_target) {
      record.n_star = n;
      return record;
    }
  }
  record.n_star = cfg.budget;
  record.truncated = true;
  return record;
}

ProbeResult prefix_restart_probe(const TreeMdp& mdp, const SimPolicyState& policy,
                                 int attempts, Xoshiro256ss& rng) {
  if (attempts < 1) throw std::invalid_argument("probe: attempts must be >= 1");
  ProbeResult result;
  int best_prefix = 0;
  for (int k = 0; k < attempts; ++k) {
    const TreeRollout rollout = sample_rollout(mdp, policy, rng);
    if (rollout.correct) {
      result.pass = true;
      result.prefix_pass = true;
      return result;
    }
    best_prefix = std::max(best_prefix, rollout.match_depth);
  }
  // All direct attempts failed: restart from the deepest verified prefix and
  // sample the remaining layers from the unchanged policy.
  result.restart_depth = best_prefix;
  for (int k = 0; k < attempts && !result.prefix_pass; ++k) {
    bool on_path = true;
    for (int h = best_prefix + 1; h <= mdp.depth && on_path; ++h) {
      const double p = policy.correct_action_prob(mdp, h);
      on_path = rng.bernoulli(p);
    }
    result.prefix_pass = on_path;
  }
  return result;
}

std::string to_string(TreeScheme scheme) {
  return scheme == TreeScheme::sparse ? "sparse" : "dense";
}

}  // namespace prefixrl
