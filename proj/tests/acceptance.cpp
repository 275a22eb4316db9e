// Acceptance suite: every release criterion below runs at its stated
// tolerance and prints one PASS/FAIL line. The process exits nonzero if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "prefixrl/advantage.hpp"
#include "prefixrl/commands.hpp"
#include "prefixrl/eval_metrics.hpp"
#include "prefixrl/localizer.hpp"
#include "prefixrl/rng.hpp"
#include "prefixrl/rollout.hpp"
#include "prefixrl/shaper.hpp"
#include "prefixrl/surrogate.hpp"
#include "prefixrl/tree_sim.hpp"

using namespace prefixrl;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

double median(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? static_cast<double>(v[n / 2])
                    : 0.5 * (static_cast<double>(v[n / 2 - 1]) +
                             static_cast<double>(v[n / 2]));
}

double median_n_star(TreeScheme scheme, int depth, int n_seeds, double eta,
                     double alpha, double epsilon) {
  const std::uint64_t scheme_tag = scheme == TreeScheme::sparse ? 1 : 2;
  SimRunConfig cfg{depth, eta, alpha, epsilon, scheme,
                   DenseCreditRule::matched_prefix, 10'000'000};
  std::vector<long> values;
  values.reserve(static_cast<std::size_t>(n_seeds));
  for (int j = 0; j < n_seeds; ++j) {
    const ComplexityRecord rec =
        run_to_epsilon(cfg, derive_seed(42, scheme_tag, depth, j));
    values.push_back(rec.n_star);
  }
  return median(values);
}

// ---- shared random fixtures ------------------------------------------------

Rollout make_rollout(int n_tokens, std::vector<int> bounds, bool correct,
                     int prompt_len = 0) {
  Rollout r;
  r.tokens.resize(static_cast<std::size_t>(n_tokens));
  std::iota(r.tokens.begin(), r.tokens.end(), 0);
  r.step_bounds = std::move(bounds);
  r.correct = correct;
  r.prompt_len = prompt_len;
  r.validate();
  return r;
}

Rollout random_rollout(Xoshiro256ss& rng, bool correct, int max_tokens = 20) {
  const int n = rng.uniform_int(1, max_tokens);
  std::vector<int> bounds{1};
  for (int t = 2; t <= n; ++t)
    if (rng.bernoulli(0.3)) bounds.push_back(t);
  bounds.push_back(n + 1);
  return make_rollout(n, std::move(bounds), correct, rng.uniform_int(0, 6));
}

struct GroupFixture {
  RolloutGroup group;
  std::vector<std::vector<double>> rewards;
  std::vector<RolloutShaping> shaping;
};

GroupFixture random_group(Xoshiro256ss& rng) {
  static const Scheme schemes[] = {Scheme::sparse, Scheme::vppo, Scheme::mixed,
                                   Scheme::rts};
  static const PrefixStrategyKind kinds[] = {
      PrefixStrategyKind::simple, PrefixStrategyKind::shorten_fixed,
      PrefixStrategyKind::shorten_partial, PrefixStrategyKind::shorten_prompt};
  GroupFixture fx;
  fx.group.question_id = "q";
  const Scheme scheme = schemes[rng.uniform_int(0, 3)];
  const int g = rng.uniform_int(2, 8);
  for (int i = 0; i < g; ++i) {
    const bool correct = rng.bernoulli(0.5);
    const Rollout r = random_rollout(rng, correct);
    SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.alpha = 0.5;
    StepScores scores(static_cast<std::size_t>(r.num_steps()));
    for (double& s : scores) s = rng.next_double();
    std::optional<PrefixSpec> spec;
    if (!correct && (scheme == Scheme::vppo || scheme == Scheme::rts)) {
      PrefixStrategy strategy;
      strategy.kind = kinds[rng.uniform_int(0, 3)];
      strategy.cut = rng.uniform_int(0, 10);
      spec = apply_strategy(
          *build_good_prefix(r, rng.uniform_int(1, r.num_steps()), strategy), r);
    }
    fx.rewards.push_back(token_rewards(r, spec, cfg, &scores));
    fx.shaping.push_back(
        {correct, scheme == Scheme::vppo && spec ? spec->reward_prefix_end : 0});
    fx.group.rollouts.push_back(r);
  }
  return fx;
}

// ---- criterion 1: sample-complexity separation ------------------------------

void criterion_1() {
  const double eta = 0.5, alpha = 0.5, epsilon = 0.1;
  const int n_seeds = 100;

  std::vector<double> sparse_median(10, 0.0);  // index = depth, 4..9
  for (int depth = 4; depth <= 9; ++depth)
    sparse_median[static_cast<std::size_t>(depth)] =
        median_n_star(TreeScheme::sparse, depth, n_seeds, eta, alpha, epsilon);

  bool growth_ok = true;
  std::string growth_detail;
  for (int depth = 4; depth <= 8; ++depth) {
    const double ratio = sparse_median[static_cast<std::size_t>(depth) + 1] /
                         sparse_median[static_cast<std::size_t>(depth)];
    growth_ok = growth_ok && ratio >= 1.5;
    growth_detail += (growth_detail.empty() ? "" : " ") + std::to_string(depth) +
                     "->" + std::to_string(depth + 1) + ":" +
                     std::to_string(ratio).substr(0, 4);
  }
  report("criterion-1a sparse-growth", growth_ok,
         "median N* ratios per extra layer (need >= 1.5): " + growth_detail);

  double worst_c = 0.0;
  double dense_median_8 = 0.0;
  for (int depth = 2; depth <= 12; ++depth) {
    const double med =
        median_n_star(TreeScheme::dense, depth, n_seeds, eta, alpha, epsilon);
    if (depth == 8) dense_median_8 = med;
    const double unit = depth * std::log(depth / epsilon) / (eta * alpha);
    worst_c = std::max(worst_c, med / unit);
  }
  report("criterion-1b dense-bound", worst_c <= 10.0,
         "max C with median N* <= C*H*ln(H/eps)/(eta*alpha): C = " +
             std::to_string(worst_c));

  const double separation = sparse_median[8] / dense_median_8;
  report("criterion-1c separation-at-8", separation > 10.0,
         "median sparse/dense at H=8: " + std::to_string(separation) +
             " (need > 10; sparse " + std::to_string(sparse_median[8]) +
             ", dense " + std::to_string(dense_median_8) + ")");
}

// ---- criterion 2: closed-form policy check ---------------------------------

void criterion_2() {
  bool ok = true;
  for (const double eta : {0.5, 1.0, 0.3}) {
    for (const int depth : {1, 4, 8, 12}) {
      const TreeMdp mdp =
          TreeMdp::with_actions(std::vector<int>(static_cast<std::size_t>(depth), 1));
      SimPolicyState policy(depth, eta);
      const TreeUpdateConfig sparse{TreeScheme::sparse, 0.5,
                                    DenseCreditRule::matched_prefix};
      TreeRollout correct;
      correct.actions = mdp.correct_actions;
      correct.correct = true;
      correct.match_depth = depth;
      for (int k = 1; k <= 15; ++k) {
        apply_update(policy, mdp, correct, sparse);
        const double expected = 1.0 / (1.0 + std::exp(-eta * k));
        for (int h = 1; h <= depth; ++h)
          ok = ok &&
               std::fabs(policy.correct_action_prob(mdp, h) - expected) <= 1e-12;
        ok = ok && std::fabs(policy.success_probability(mdp) -
                             std::pow(expected, depth)) <= 1e-12;
      }
    }
  }
  report("criterion-2 closed-form", ok,
         "per-depth prob = 1/(1+e^{-eta k}) and success = its H-th power to 1e-12");
}

// ---- criterion 3: advantage oracle equivalence ------------------------------

void criterion_3() {
  Xoshiro256ss rng(20250801);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const GroupFixture fx = random_group(rng);
    const AdvantageTensor t = raw_advantages(fx.group, fx.rewards);
    for (std::size_t i = 0; i < fx.rewards.size() && ok; ++i) {
      const std::vector<double>& rewards = fx.rewards[i];
      for (std::size_t pos = 0; pos < rewards.size() && ok; ++pos) {
        double tail = 0.0;
        for (std::size_t u = pos; u < rewards.size(); ++u) tail += rewards[u];
        ok = t.token_values[i][pos] == tail;
      }
    }
  }
  report("criterion-3 return-to-go", ok,
         "1000 random groups: closed-form == brute-force suffix sums exactly");
}

// ---- criterion 4: normalization suite ---------------------------------------

void criterion_4() {
  Xoshiro256ss rng(20250802);
  bool centering_ok = true, std_ok = true, uniform_ok = true, relu_ok = true,
       alpha0_ok = true;

  for (int trial = 0; trial < 400; ++trial) {
    const GroupFixture fx = random_group(rng);
    const AdvantageTensor raw = raw_advantages(fx.group, fx.rewards);

    const AdvantageTensor centered = normalize(raw, {}, fx.shaping);
    double residual = 0.0;
    for (double m : raw.response_means) residual += m - centered.group_mean;
    centering_ok = centering_ok && std::fabs(residual) < 1e-12;

    NormalizationConfig std_cfg;
    std_cfg.use_std = true;
    const AdvantageTensor standardized = normalize(raw, std_cfg, fx.shaping);
    if (*standardized.group_std >= std_cfg.std_floor) {
      double mean = 0.0, var = 0.0;
      for (double m : raw.response_means) {
        const double z = (m - standardized.group_mean) / *standardized.group_std;
        mean += z;
        var += z * z;
      }
      mean /= static_cast<double>(fx.group.size());
      var /= static_cast<double>(fx.group.size());
      std_ok = std_ok && std::fabs(mean) < 1e-12 && std::fabs(var - 1.0) < 1e-12;
    }

    NormalizationConfig relu_cfg;
    relu_cfg.use_relu_on_prefix = true;
    const AdvantageTensor clamped = normalize(raw, relu_cfg, fx.shaping);
    for (std::size_t i = 0; i < fx.rewards.size(); ++i) {
      for (std::size_t t = 0; t < fx.rewards[i].size(); ++t) {
        const bool in_region = !fx.shaping[i].correct &&
                               static_cast<int>(t) < fx.shaping[i].reward_prefix_len;
        if (in_region)
          relu_ok = relu_ok && clamped.token_values[i][t] ==
                                   std::max(centered.token_values[i][t], 0.0);
        else
          relu_ok =
              relu_ok && clamped.token_values[i][t] == centered.token_values[i][t];
      }
    }
  }

  // uniform outcomes: all correct -> zero std -> all-zero advantages
  {
    RolloutGroup group;
    group.question_id = "u";
    std::vector<std::vector<double>> rewards;
    SchemeConfig sparse;
    sparse.scheme = Scheme::sparse;
    for (int i = 0; i < 4; ++i) {
      group.rollouts.push_back(make_rollout(3 + i, {1, 4 + i}, true));
      rewards.push_back(token_rewards(group.rollouts.back(), std::nullopt, sparse));
    }
    NormalizationConfig std_cfg;
    std_cfg.use_std = true;
    const AdvantageTensor t = normalize(raw_advantages(group, rewards), std_cfg,
                                        std::vector<RolloutShaping>(4, {true, 0}));
    for (const auto& adv : t.token_values)
      for (double a : adv) uniform_ok = uniform_ok && a == 0.0;
  }

  // vppo with alpha = 0 + std reproduces the sparse scheme's tensor exactly
  for (int trial = 0; trial < 200; ++trial) {
    RolloutGroup group;
    group.question_id = "g";
    std::vector<std::vector<double>> vppo_rewards, sparse_rewards;
    std::vector<RolloutShaping> shaping;
    const int g = rng.uniform_int(2, 6);
    for (int i = 0; i < g; ++i) {
      const bool correct = rng.bernoulli(0.5);
      const Rollout r = random_rollout(rng, correct);
      SchemeConfig vppo;
      vppo.scheme = Scheme::vppo;
      vppo.alpha = 0.0;
      SchemeConfig sparse;
      sparse.scheme = Scheme::sparse;
      std::optional<PrefixSpec> spec;
      if (!correct)
        spec = apply_strategy(
            *build_good_prefix(r, rng.uniform_int(1, r.num_steps())), r);
      group.rollouts.push_back(r);
      vppo_rewards.push_back(token_rewards(r, spec, vppo));
      sparse_rewards.push_back(token_rewards(r, std::nullopt, sparse));
      shaping.push_back({correct, 0});
    }
    NormalizationConfig std_cfg;
    std_cfg.use_std = true;
    const AdvantageTensor a =
        normalize(raw_advantages(group, vppo_rewards), std_cfg, shaping);
    const AdvantageTensor b =
        normalize(raw_advantages(group, sparse_rewards), std_cfg, shaping);
    alpha0_ok = alpha0_ok && a.token_values == b.token_values;
  }

  report("criterion-4 normalization",
         centering_ok && std_ok && uniform_ok && relu_ok && alpha0_ok,
         std::string("centering ") + (centering_ok ? "ok" : "BAD") + ", std " +
             (std_ok ? "ok" : "BAD") + ", uniform-zero " +
             (uniform_ok ? "ok" : "BAD") + ", relu-region " +
             (relu_ok ? "ok" : "BAD") + ", alpha0-sparse " + (alpha0_ok ? "ok" : "BAD"));
}

// ---- criterion 5: surrogate gradient ----------------------------------------

void criterion_5() {
  Xoshiro256ss rng(20250803);
  const double h = 1e-5;
  const double clip_eps = 0.2;
  double worst = 0.0;
  int checked = 0;
  while (checked < 100) {
    const int states = rng.uniform_int(2, 10);
    const int actions = rng.uniform_int(2, 4);
    TabularPolicy old_policy(states, actions);
    for (double& l : old_policy.logits) l = 2.0 * rng.next_double() - 1.0;

    BatchSample batch;
    const int n_questions = rng.uniform_int(1, 3);
    for (int q = 0; q < n_questions; ++q) {
      QuestionSample question;
      const int n_rollouts = rng.uniform_int(2, 4);
      for (int i = 0; i < n_rollouts; ++i) {
        RolloutSample roll;
        const int n_tokens = rng.uniform_int(1, 6);
        for (int t = 0; t < n_tokens; ++t) {
          TokenSample sample;
          sample.state = rng.uniform_int(0, states - 1);
          sample.action = rng.uniform_int(0, actions - 1);
          sample.old_prob = old_policy.prob(sample.state, sample.action);
          sample.advantage = 4.0 * rng.next_double() - 2.0;
          roll.push_back(sample);
        }
        question.rollouts.push_back(std::move(roll));
      }
      batch.questions.push_back(std::move(question));
    }

    TabularPolicy policy = old_policy;
    for (double& l : policy.logits) l += 0.2 * (rng.next_double() - 0.5);

    bool near_kink = false;
    for (const QuestionSample& q : batch.questions)
      for (const RolloutSample& roll : q.rollouts)
        for (const TokenSample& t : roll) {
          const double ratio = policy.prob(t.state, t.action) / t.old_prob;
          near_kink = near_kink || std::fabs(ratio - (1.0 - clip_eps)) < 1e-3 ||
                      std::fabs(ratio - (1.0 + clip_eps)) < 1e-3;
        }
    if (near_kink) continue;
    ++checked;

    const std::vector<double> analytic = gradient(batch, policy, clip_eps);
    for (int s = 0; s < states; ++s) {
      for (int a = 0; a < actions; ++a) {
        TabularPolicy up = policy, down = policy;
        up.logit(s, a) += h;
        down.logit(s, a) -= h;
        const double fd =
            (objective(batch, up, clip_eps) - objective(batch, down, clip_eps)) /
            (2.0 * h);
        const double rel =
            std::fabs(analytic[static_cast<std::size_t>(s) * actions + a] - fd) /
            std::max(1.0, std::fabs(fd));
        worst = std::max(worst, rel);
      }
    }
  }
  report("criterion-5 gradient-fd", worst < 1e-5,
         "max relative error vs central differences (h=1e-5): " +
             std::to_string(worst));
}

// ---- criterion 6: pass@k ------------------------------------------------------

void criterion_6() {
  bool exact_ok = true;
  for (int n = 1; n <= 12 && exact_ok; ++n) {
    for (int c = 0; c <= n && exact_ok; ++c) {
      for (int k = 1; k <= n && exact_ok; ++k) {
        long total = 0, hit = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          if (std::popcount(mask) != k) continue;
          ++total;
          if ((mask & ((1u << c) - 1u)) != 0) ++hit;
        }
        const double oracle =
            static_cast<double>(hit) / static_cast<double>(total);
        exact_ok = std::fabs(pass_at_k(n, c, k) - oracle) <= 1e-12;
      }
    }
  }

  bool monotone_ok = true;
  const int n = 256;
  const int ks[] = {1, 2, 4, 8, 16, 32, 64, 128};
  for (int c = 0; c <= n; ++c) {
    double prev = -1.0;
    for (int k : ks) {
      const double v = pass_at_k(n, c, k);
      monotone_ok = monotone_ok && v >= prev && v >= 0.0 && v <= 1.0;
      prev = v;
    }
  }
  for (int k : ks) {
    double prev = -1.0;
    for (int c = 0; c <= n; ++c) {
      const double v = pass_at_k(n, c, k);
      monotone_ok = monotone_ok && v >= prev;
      prev = v;
    }
  }
  report("criterion-6 pass-at-k", exact_ok && monotone_ok,
         std::string("enumeration n<=12 ") + (exact_ok ? "ok" : "BAD") +
             ", monotone scan at n=256 " + (monotone_ok ? "ok" : "BAD"));
}

// ---- criterion 7: localizer / tally suite -------------------------------------

void criterion_7() {
  Xoshiro256ss rng(20250804);
  std::vector<ScoredSample> corpus;
  corpus.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    ScoredSample s;
    s.scores.resize(static_cast<std::size_t>(rng.uniform_int(1, 12)));
    for (double& v : s.scores)
      v = static_cast<double>(rng.uniform_int(0, 100)) / 100.0;  // ties included
    s.truth = rng.uniform_int(1, static_cast<int>(s.scores.size()));
    corpus.push_back(std::move(s));
  }

  bool monotone_ok = true;
  std::vector<double> thresholds;
  for (double t = 0.05; t < 1.0; t += 0.05) thresholds.push_back(t);
  for (const ScoredSample& s : corpus) {
    int prev = static_cast<int>(s.scores.size()) + 1;
    bool first = true;
    for (double t : thresholds) {
      const int cur =
          first_error(s.scores, t).value_or(static_cast<int>(s.scores.size()) + 1);
      if (!first) monotone_ok = monotone_ok && cur <= prev;
      prev = cur;
      first = false;
    }
  }

  const std::vector<AgreementTally> tallies = sweep_thresholds(corpus, thresholds);
  bool tally_ok = true;
  for (const AgreementTally& t : tallies) {
    tally_ok = tally_ok && t.total() == 10000;
    tally_ok = tally_ok && t.not_more() == t.match + t.less + t.fail;
  }

  // schema check through the real command on the frozen corpus
  const fs::path out_dir = fs::temp_directory_path() / "prefixrl_acceptance_sweep";
  fs::remove_all(out_dir);
  SweepThresholdOptions opt;
  opt.input = std::string(PREFIXRL_TEST_DATA_DIR) + "/localizer_corpus.jsonl";
  opt.out_dir = out_dir.string();
  bool schema_ok = cmd_sweep_threshold(opt) == kExitOk;
  if (schema_ok) {
    std::ifstream in(out_dir / "sweep.csv");
    std::string header;
    std::getline(in, header);
    schema_ok = header == "threshold,match,less,more,fail,not_more";
  }
  fs::remove_all(out_dir);

  report("criterion-7 localizer", monotone_ok && tally_ok && schema_ok,
         std::string("threshold monotonicity ") + (monotone_ok ? "ok" : "BAD") +
             ", 10k tally identities " + (tally_ok ? "ok" : "BAD") +
             ", csv schema " + (schema_ok ? "ok" : "BAD"));
}

// ---- criterion 8: shaping suite -----------------------------------------------

void criterion_8() {
  Xoshiro256ss rng(20250805);
  bool prefix_ok = true;
  static const PrefixStrategyKind kinds[] = {
      PrefixStrategyKind::simple, PrefixStrategyKind::shorten_fixed,
      PrefixStrategyKind::shorten_partial, PrefixStrategyKind::shorten_prompt};
  for (int trial = 0; trial < 2000; ++trial) {
    const Rollout r = random_rollout(rng, false, 60);
    PrefixStrategy strategy;
    strategy.kind = kinds[trial % 4];
    strategy.cut = rng.uniform_int(0, 80);
    strategy.fraction = rng.next_double();
    const PrefixSpec spec = apply_strategy(
        *build_good_prefix(r, rng.uniform_int(1, r.num_steps()), strategy), r);
    prefix_ok = prefix_ok && 0 <= spec.reward_prefix_end &&
                spec.reward_prefix_end <= spec.good_prefix_end &&
                spec.good_prefix_end <= r.num_tokens() &&
                spec.reward_prefix_end ==
                    std::max(0, spec.good_prefix_end - strategy.cut_tokens(r));
  }

  // exploitation layout (shared prefix) and exploration layout (distinct)
  SchemeConfig vppo;
  vppo.scheme = Scheme::vppo;
  vppo.alpha = 0.5;
  NormalizationConfig relu_norm;
  relu_norm.use_relu_on_prefix = true;

  RolloutGroup exploit;
  exploit.question_id = "exploit";
  exploit.rollouts.push_back(make_rollout(9, {1, 4, 7, 10}, true));
  exploit.rollouts.push_back(make_rollout(9, {1, 4, 7, 10}, false));
  const SignPatternReport a = scenario_sign_check(exploit, 3, vppo, relu_norm);

  RolloutGroup explore;
  explore.question_id = "explore";
  explore.rollouts.push_back(make_rollout(6, {1, 3, 5, 7}, true));
  explore.rollouts.push_back(make_rollout(12, {1, 5, 9, 13}, false));
  const SignPatternReport b = scenario_sign_check(explore, 3, vppo, relu_norm);

  const bool signs_ok = a.sparse_conflict_on_prefix && a.shaped_prefix_nonnegative &&
                        a.suffix_negative_both && b.shaped_prefix_nonnegative &&
                        b.suffix_negative_both && b.sparse_conflict_on_prefix;

  report("criterion-8 shaping", prefix_ok && signs_ok,
         std::string("prefix containment/length ") + (prefix_ok ? "ok" : "BAD") +
             ", sign patterns " + (signs_ok ? "ok" : "BAD"));
}

// ---- criterion 9: determinism ---------------------------------------------------

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9() {
  const fs::path base = fs::temp_directory_path() / "prefixrl_acceptance_det";
  fs::remove_all(base);
  fs::create_directories(base);

  const std::string cli = PREFIXRL_CLI_PATH;
  const auto run = [&](const std::string& args) {
    const std::string command = cli + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
  };

  bool ok = true;
  const std::string sim_args = "simulate --depths 2-5 --seeds 10 --root-seed 42 --out ";
  ok = ok && run(sim_args + (base / "sim1").string());
  ok = ok && run(sim_args + (base / "sim2").string());
  ok = ok && slurp(base / "sim1/runs.csv") == slurp(base / "sim2/runs.csv");
  ok = ok && slurp(base / "sim1/summary.csv") == slurp(base / "sim2/summary.csv");
  ok = ok && !slurp(base / "sim1/runs.csv").empty();

  {
    std::ofstream out(base / "rollouts.jsonl");
    out << R"({"question_id":"q0","text":"t1 t2 t3 t4","correct":true,"prompt_len":0})"
        << "\n";
    out << R"({"question_id":"q0","text":"Step 1: a Step 2: b","token_offsets":[0,8,10,18],)"
           R"("correct":false,"prompt_len":0,"step_scores":[0.95,0.3]})"
        << "\n";
  }
  const std::string shape_args = "shape --input " + (base / "rollouts.jsonl").string() +
                                 " --scheme vppo --strategy simple --out ";
  ok = ok && run(shape_args + (base / "shape1").string());
  ok = ok && run(shape_args + (base / "shape2").string());
  ok = ok &&
       slurp(base / "shape1/advantages.csv") == slurp(base / "shape2/advantages.csv");
  ok = ok && slurp(base / "shape1/summary.csv") == slurp(base / "shape2/summary.csv");
  ok = ok && !slurp(base / "shape1/advantages.csv").empty();

  fs::remove_all(base);
  report("criterion-9 determinism", ok,
         "fixed-seed simulate and shape outputs byte-identical across two runs");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
