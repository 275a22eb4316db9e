#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prefixrl/commands.hpp"
#include "prefixrl/records.hpp"

namespace {

using namespace prefixrl;

// "2,4,8" or "2-8" or a mix of both.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t dash = item.find('-', 1);  // allow leading minus
    if (dash != std::string::npos) {
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = std::stoi(item.substr(dash + 1));
      if (hi < lo) throw CLI::ValidationError("range '" + item + "' is reversed");
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(std::stoi(item));
    }
    pos = comma + 1;
  }
  if (values.empty()) throw CLI::ValidationError("empty list");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Credit-assignment engine for process-supervised RL on "
               "step-enumerated reasoning traces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from an INI config file");
  app.option_defaults()->always_capture_default();

  bool dump_config = false;
  app.add_flag("--dump-config", dump_config,
               "Print the effective configuration and exit");

  // ---- shape ----------------------------------------------------------
  ShapeOptions shape;
  std::string shape_scheme = "vppo";
  std::string shape_strategy = "prompt";
  auto* cmd_shape_app = app.add_subcommand(
      "shape", "Turn rollout records into per-token reward/advantage dumps");
  cmd_shape_app->add_option("--input", shape.input, "Rollout records (JSON lines)")
      ->required();
  cmd_shape_app->add_option("--out", shape.out_dir, "Output directory")->required();
  cmd_shape_app->add_option("--scheme", shape_scheme,
                            "Reward scheme: sparse|vppo|mixed|rts");
  cmd_shape_app->add_option("--alpha", shape.scheme.alpha, "Prefix bonus (vppo)");
  cmd_shape_app->add_option("--lambda", shape.scheme.lambda, "Score mix rate (mixed)");
  cmd_shape_app->add_option("--beta", shape.scheme.beta, "Sigmoid slope (rts)");
  cmd_shape_app->add_option("--gamma", shape.scheme.gamma, "Sigmoid offset (rts)");
  cmd_shape_app->add_option("--threshold", shape.threshold,
                            "First-error score threshold");
  cmd_shape_app->add_option("--strategy", shape_strategy,
                            "Reward prefix strategy: simple|fixed|partial|prompt");
  cmd_shape_app->add_option("--cut", shape.strategy.cut,
                            "Tokens trimmed by the fixed strategy");
  cmd_shape_app->add_option("--fraction", shape.strategy.fraction,
                            "Fraction trimmed by the partial strategy");
  cmd_shape_app->add_flag("--use-std", shape.norm.use_std,
                          "Divide advantages by the group std");
  cmd_shape_app->add_flag("--relu", shape.norm.use_relu_on_prefix,
                          "Clamp reward-prefix advantages of incorrect rollouts at 0");
  cmd_shape_app->add_option("--std-floor", shape.norm.std_floor,
                            "Std below this emits all-zero advantages");

  // ---- simulate -------------------------------------------------------
  SimulateOptions sim;
  std::string sim_depths = "2-8";
  std::string sim_schemes = "sparse,dense";
  std::string sim_credit = "matched-prefix";
  auto* cmd_sim_app = app.add_subcommand(
      "simulate", "Sample-complexity sweep on the layered reasoning tree");
  cmd_sim_app->add_option("--out", sim.out_dir, "Output directory")->required();
  cmd_sim_app->add_option("--depths", sim_depths, "Tree depths, e.g. 2,4 or 2-12")->join(',');
  cmd_sim_app->add_option("--seeds", sim.n_seeds, "Runs per (scheme, depth)");
  cmd_sim_app->add_option("--root-seed", sim.root_seed,
                          "Root seed; every run derives its own stream");
  cmd_sim_app->add_option("--eta", sim.eta, "Learning rate");
  cmd_sim_app->add_option("--alpha", sim.alpha, "Prefix bonus of the dense scheme");
  cmd_sim_app->add_option("--epsilon", sim.epsilon,
                          "Target suboptimality, must lie in (0, 1/2)");
  cmd_sim_app->add_option("--budget", sim.budget, "Rollout cap per run");
  cmd_sim_app->add_option("--schemes", sim_schemes, "sparse,dense or one of them")->join(',');
  cmd_sim_app->add_option("--credit-rule", sim_credit,
                          "Dense bonus span: matched-prefix|through-first-error");

  // ---- passk ----------------------------------------------------------
  PasskOptions passk;
  std::string passk_ks = "1,2,4,8,16,32,64,128";
  auto* cmd_passk_app =
      app.add_subcommand("passk", "Unbiased Pass@K over (question, n, c) records");
  cmd_passk_app->add_option("--input", passk.input, "CSV (question_id,n,c) or JSON lines")
      ->required();
  cmd_passk_app->add_option("--out", passk.out_dir, "Output directory")->required();
  cmd_passk_app->add_option("--k", passk_ks, "K values, e.g. 1,2,4 or 1-16")->join(',');

  // ---- stats ----------------------------------------------------------
  StatsOptions stats;
  auto* cmd_stats_app = app.add_subcommand(
      "stats", "Good-prefix statistics of incorrect rollouts");
  cmd_stats_app->add_option("--input", stats.input, "Rollout records (JSON lines)")
      ->required();
  cmd_stats_app->add_option("--out", stats.out_dir, "Output directory")->required();
  cmd_stats_app->add_option("--threshold", stats.threshold,
                            "First-error score threshold");

  // ---- sweep-threshold --------------------------------------------------
  SweepThresholdOptions sweep;
  std::string sweep_thresholds = "0.5,0.6,0.7,0.8,0.9";
  auto* cmd_sweep_app = app.add_subcommand(
      "sweep-threshold", "Localizer agreement tallies across thresholds");
  cmd_sweep_app->add_option("--input", sweep.input,
                            "Records with step_scores and first_error_truth")
      ->required();
  cmd_sweep_app->add_option("--out", sweep.out_dir, "Output directory")->required();
  cmd_sweep_app->add_option("--thresholds", sweep_thresholds, "Comma-separated list")->join(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dump_config) {
      std::cout << app.config_to_str(true, true);
      return kExitOk;
    }
    if (cmd_shape_app->parsed()) {
      shape.scheme.scheme = parse_scheme(shape_scheme);
      const int cut = shape.strategy.cut;
      const double fraction = shape.strategy.fraction;
      shape.strategy = parse_prefix_strategy(shape_strategy);
      shape.strategy.cut = cut;
      shape.strategy.fraction = fraction;
      return cmd_shape(shape);
    }
    if (cmd_sim_app->parsed()) {
      sim.depths = parse_int_list(sim_depths);
      sim.run_sparse = sim_schemes.find("sparse") != std::string::npos;
      sim.run_dense = sim_schemes.find("dense") != std::string::npos;
      if (sim_credit == "matched-prefix")
        sim.credit = DenseCreditRule::matched_prefix;
      else if (sim_credit == "through-first-error")
        sim.credit = DenseCreditRule::through_first_error;
      else
        throw std::invalid_argument("unknown credit rule: " + sim_credit);
      return cmd_simulate(sim);
    }
    if (cmd_passk_app->parsed()) {
      passk.ks = parse_int_list(passk_ks);
      return cmd_passk(passk);
    }
    if (cmd_stats_app->parsed()) return cmd_stats(stats);
    if (cmd_sweep_app->parsed()) {
      sweep.thresholds.clear();
      std::size_t pos = 0;
      while (pos < sweep_thresholds.size()) {
        std::size_t comma = sweep_thresholds.find(',', pos);
        if (comma == std::string::npos) comma = sweep_thresholds.size();
        sweep.thresholds.push_back(std::stod(sweep_thresholds.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return cmd_sweep_threshold(sweep);
    }
  } catch (const RecordError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
