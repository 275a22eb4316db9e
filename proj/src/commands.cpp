#include "prefixrl/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "json.hpp"
#include "prefixrl/csv.hpp"
#include "prefixrl/eval_metrics.hpp"
#include "prefixrl/manifest.hpp"
#include "prefixrl/records.hpp"

namespace prefixrl {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void ensure_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) throw std::invalid_argument("output directory not set");
  fs::create_directories(out_dir);
}

std::string join(const std::string& dir, const std::string& file) {
  return (fs::path(dir) / file).string();
}

double median(std::vector<long> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return static_cast<double>(values[n / 2]);
  return 0.5 * (static_cast<double>(values[n / 2 - 1]) +
                static_cast<double>(values[n / 2]));
}

json strategy_json(const PrefixStrategy& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["cut"] = s.cut;
  j["fraction"] = s.fraction;
  return j;
}

}  // namespace

int cmd_shape(const ShapeOptions& options) {
  options.scheme.validate();
  const std::vector<RolloutRecord> records = read_rollout_records(options.input);
  if (records.empty()) throw std::runtime_error("no records in " + options.input);
  const std::vector<GroupedRecords> groups = group_by_question(records);

  const bool needs_localizer = options.scheme.scheme == Scheme::vppo ||
                               options.scheme.scheme == Scheme::rts;
  const bool needs_scores_everywhere = options.scheme.scheme == Scheme::mixed;

  long n_rollouts = 0, n_correct = 0, n_incorrect = 0;
  long n_localizer_fail = 0, n_empty_gp = 0, n_empty_rp = 0;

  ensure_out_dir(options.out_dir);
  CsvWriter adv_csv(join(options.out_dir, "advantages.csv"));
  adv_csv.header({"question_id", "rollout_idx", "token_idx", "raw", "normalized"});

  for (const GroupedRecords& g : groups) {
    if (g.group.size() < 2)
      throw RecordError(g.lines.front(), "question_id",
                        "question " + g.group.question_id +
                            " has a single rollout; groups need at least 2");
    const int group_size = g.group.size();
    std::vector<std::vector<double>> rewards(group_size);
    std::vector<RolloutShaping> shaping(group_size);

    for (int i = 0; i < group_size; ++i) {
      const Rollout& rollout = g.group.rollouts[i];
      const std::optional<StepScores>& scores = g.step_scores[i];
      ++n_rollouts;
      rollout.correct ? ++n_correct : ++n_incorrect;

      if (needs_scores_everywhere && !scores.has_value())
        throw RecordError(g.lines[i], "step_scores", "required by the mixed scheme");

      std::optional<PrefixSpec> spec;
      if (!rollout.correct && needs_localizer) {
        if (!scores.has_value())
          throw RecordError(g.lines[i], "step_scores",
                            "required by scheme '" + to_string(options.scheme.scheme) +
                                "' on incorrect rollouts");
        const std::optional<int> m_err = first_error(*scores, options.threshold);
        if (!m_err.has_value()) ++n_localizer_fail;
        spec = build_good_prefix(rollout, m_err, options.strategy);
        if (spec.has_value()) {
          *spec = apply_strategy(*spec, rollout);
          if (spec->good_prefix_end == 0) ++n_empty_gp;
          if (spec->reward_prefix_end == 0) ++n_empty_rp;
        }
      }

      const StepScores* scores_ptr = scores.has_value() ? &*scores : nullptr;
      rewards[i] = token_rewards(rollout, spec, options.scheme, scores_ptr);
      shaping[i].correct = rollout.correct;
      shaping[i].reward_prefix_len =
          options.scheme.scheme == Scheme::vppo && spec.has_value()
              ? spec->reward_prefix_end
              : 0;
    }

    const AdvantageTensor raw = raw_advantages(g.group, rewards);
    const AdvantageTensor normalized = normalize(raw, options.norm, shaping);
    for (int i = 0; i < group_size; ++i) {
      const auto& raw_adv = raw.token_values[i];
      const auto& norm_adv = normalized.token_values[i];
      for (std::size_t t = 0; t < raw_adv.size(); ++t) {
        adv_csv.field(g.group.question_id)
            .field(i + 1)
            .field(static_cast<int>(t) + 1)
            .field(raw_adv[t])
            .field(norm_adv[t]);
        adv_csv.end_row();
      }
    }
  }
  adv_csv.close();

  CsvWriter summary(join(options.out_dir, "summary.csv"));
  summary.header({"groups", "rollouts", "correct", "incorrect", "localizer_fail",
                  "empty_good_prefix", "empty_reward_prefix"});
  summary.field(static_cast<long>(groups.size()))
      .field(n_rollouts)
      .field(n_correct)
      .field(n_incorrect)
      .field(n_localizer_fail)
      .field(n_empty_gp)
      .field(n_empty_rp);
  summary.end_row();
  summary.close();

  json config;
  config["input"] = options.input;
  config["scheme"] = to_string(options.scheme.scheme);
  config["alpha"] = options.scheme.alpha;
  config["lambda"] = options.scheme.lambda;
  config["beta"] = options.scheme.beta;
  config["gamma"] = options.scheme.gamma;
  config["threshold"] = options.threshold;
  config["strategy"] = strategy_json(options.strategy);
  config["use_std"] = options.norm.use_std;
  config["relu_on_prefix"] = options.norm.use_relu_on_prefix;
  config["std_floor"] = options.norm.std_floor;
  write_manifest(options.out_dir, "shape", config, {"advantages.csv", "summary.csv"});
  return kExitOk;
}

int cmd_simulate(const SimulateOptions& options) {
  if (options.depths.empty())
    throw std::invalid_argument("simulate: no depths given");
  if (options.n_seeds < 1)
    throw std::invalid_argument("simulate: n_seeds must be >= 1");
  if (!options.run_sparse && !options.run_dense)
    throw std::invalid_argument("simulate: no scheme selected");

  std::vector<TreeScheme> schemes;
  if (options.run_sparse) schemes.push_back(TreeScheme::sparse);
  if (options.run_dense) schemes.push_back(TreeScheme::dense);

  // Validate parameters before any output is created.
  for (int depth : options.depths) {
    SimRunConfig probe{depth, options.eta, options.alpha, options.epsilon,
                       TreeScheme::sparse, options.credit, options.budget};
    probe.validate();
  }

  ensure_out_dir(options.out_dir);
  CsvWriter runs(join(options.out_dir, "runs.csv"));
  runs.header({"scheme", "H", "eta", "alpha", "epsilon", "seed", "n_star", "truncated"});

  bool any_truncated = false;
  // medians[scheme][depth]
  std::vector<std::vector<long>> sparse_by_depth(options.depths.size());
  std::vector<std::vector<long>> dense_by_depth(options.depths.size());

  for (const TreeScheme scheme : schemes) {
    const std::uint64_t scheme_tag = scheme == TreeScheme::sparse ? 1 : 2;
    for (std::size_t d = 0; d < options.depths.size(); ++d) {
      const int depth = options.depths[d];
      SimRunConfig cfg{depth, options.eta, options.alpha, options.epsilon,
                       scheme, options.credit, options.budget};
      for (int j = 0; j < options.n_seeds; ++j) {
        const std::uint64_t seed =
            derive_seed(options.root_seed, scheme_tag, depth, j);
        const ComplexityRecord rec = run_to_epsilon(cfg, seed);
        any_truncated = any_truncated || rec.truncated;
        (scheme == TreeScheme::sparse ? sparse_by_depth : dense_by_depth)[d]
            .push_back(rec.n_star);
        runs.field(to_string(rec.scheme))
            .field(rec.depth)
            .field(rec.eta)
            .field(rec.alpha)
            .field(rec.epsilon)
            .field(rec.seed)
            .field(rec.n_star)
            .field(rec.truncated ? 1 : 0);
        runs.end_row();
      }
    }
  }
  runs.close();

  CsvWriter summary(join(options.out_dir, "summary.csv"));
  summary.header({"H", "sparse_median", "dense_median", "sparse_over_dense"});
  for (std::size_t d = 0; d < options.depths.size(); ++d) {
    summary.field(options.depths[d]);
    const bool have_sparse = !sparse_by_depth[d].empty();
    const bool have_dense = !dense_by_depth[d].empty();
    const double sparse_med = have_sparse ? median(sparse_by_depth[d]) : 0.0;
    const double dense_med = have_dense ? median(dense_by_depth[d]) : 0.0;
    summary.field(have_sparse ? format_double(sparse_med) : std::string());
    summary.field(have_dense ? format_double(dense_med) : std::string());
    summary.field(have_sparse && have_dense && dense_med > 0.0
                      ? format_double(sparse_med / dense_med)
                      : std::string());
    summary.end_row();
  }
  summary.close();

  json config;
  config["depths"] = options.depths;
  config["n_seeds"] = options.n_seeds;
  config["root_seed"] = options.root_seed;
  config["eta"] = options.eta;
  config["alpha"] = options.alpha;
  config["epsilon"] = options.epsilon;
  config["budget"] = options.budget;
  config["schemes"] = [&] {
    std::vector<std::string> names;
    for (TreeScheme s : schemes) names.push_back(to_string(s));
    return names;
  }();
  config["credit_rule"] = options.credit == DenseCreditRule::matched_prefix
                              ? "matched-prefix"
                              : "through-first-error";
  write_manifest(options.out_dir, "simulate", config, {"runs.csv", "summary.csv"});
  return any_truncated ? kExitTruncated : kExitOk;
}

int cmd_passk(const PasskOptions& options) {
  if (options.ks.empty()) throw std::invalid_argument("passk: no K values");
  const std::vector<EvalRecord> records = read_eval_records(options.input);
  if (records.empty()) throw std::runtime_error("no records in " + options.input);

  ensure_out_dir(options.out_dir);
  CsvWriter csv(join(options.out_dir, "passk.csv"));
  csv.header({"K", "pass_at_k"});
  for (int k : options.ks) {
    csv.field(k).field(dataset_pass_at_k(records, k));
    csv.end_row();
  }
  csv.close();

  json config;
  config["input"] = options.input;
  config["ks"] = options.ks;
  write_manifest(options.out_dir, "passk", config, {"passk.csv"});
  return kExitOk;
}

int cmd_stats(const StatsOptions& options) {
  const std::vector<RolloutRecord> records = read_rollout_records(options.input);
  if (records.empty()) throw std::runtime_error("no records in " + options.input);

  long n_incorrect = 0, n_fail = 0;
  std::vector<PrefixStatRecord> stats_records;
  for (const RolloutRecord& r : records) {
    if (r.rollout.correct) continue;
    ++n_incorrect;
    if (!r.step_scores.has_value())
      throw RecordError(r.line, "step_scores", "required on incorrect rollouts");
    const std::optional<int> m_err = first_error(*r.step_scores, options.threshold);
    if (!m_err.has_value()) {
      ++n_fail;
      continue;
    }
    stats_records.push_back({*m_err, r.rollout.num_steps()});
  }
  if (stats_records.empty())
    throw std::runtime_error("no localized incorrect rollouts in " + options.input);
  const PrefixStats stats = prefix_stats(stats_records);

  ensure_out_dir(options.out_dir);
  CsvWriter csv(join(options.out_dir, "stats.csv"));
  csv.header({"incorrect_rollouts", "localized", "localizer_fail",
              "fraction_with_correct_step", "mean_correct_step_ratio"});
  csv.field(n_incorrect)
      .field(static_cast<long>(stats_records.size()))
      .field(n_fail)
      .field(stats.fraction_with_correct_step)
      .field(stats.mean_correct_step_ratio);
  csv.end_row();
  csv.close();

  json config;
  config["input"] = options.input;
  config["threshold"] = options.threshold;
  write_manifest(options.out_dir, "stats", config, {"stats.csv"});
  return kExitOk;
}

int cmd_sweep_threshold(const SweepThresholdOptions& options) {
  if (options.thresholds.empty())
    throw std::invalid_argument("sweep-threshold: no thresholds");
  const std::vector<RolloutRecord> records = read_rollout_records(options.input);
  if (records.empty()) throw std::runtime_error("no records in " + options.input);

  std::vector<ScoredSample> corpus;
  corpus.reserve(records.size());
  for (const RolloutRecord& r : records) {
    if (!r.step_scores.has_value())
      throw RecordError(r.line, "step_scores", "missing");
    if (!r.first_error_truth.has_value())
      throw RecordError(r.line, "first_error_truth", "missing");
    corpus.push_back({*r.step_scores, *r.first_error_truth});
  }
  const std::vector<AgreementTally> tallies =
      sweep_thresholds(corpus, options.thresholds);

  ensure_out_dir(options.out_dir);
  CsvWriter csv(join(options.out_dir, "sweep.csv"));
  csv.header({"threshold", "match", "less", "more", "fail", "not_more"});
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    csv.field(options.thresholds[i])
        .field(tallies[i].match)
        .field(tallies[i].less)
        .field(tallies[i].more)
        .field(tallies[i].fail)
        .field(tallies[i].not_more());
    csv.end_row();
  }
  csv.close();

  json config;
  config["input"] = options.input;
  config["thresholds"] = options.thresholds;
  write_manifest(options.out_dir, "sweep-threshold", config, {"sweep.csv"});
  return kExitOk;
}

}  // namespace prefixrl
