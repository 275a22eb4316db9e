#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefixrl/advantage.hpp"
#include "prefixrl/shaper.hpp"
#include "prefixrl/tree_sim.hpp"

namespace prefixrl {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitTruncated = 3;

struct ShapeOptions {
  std::string input;
  std::string out_dir;
  SchemeConfig scheme;
  NormalizationConfig norm;
  PrefixStrategy strategy;
  double threshold = kDefaultErrorThreshold;
};

// Ingest rollouts -> localize first errors -> shape rewards -> group
// advantages. Writes advantages.csv, summary.csv and manifest.json.
int cmd_shape(const ShapeOptions& options);

struct SimulateOptions {
  std::vector<int> depths;
  int n_seeds = 100;
  std::uint64_t root_seed = 42;
  double eta = 0.5;
  double alpha = 0.5;
  double epsilon = 0.1;
  long budget = 10'000'000;
  bool run_sparse = true;
  bool run_dense = true;
  DenseCreditRule credit = DenseCreditRule::matched_prefix;
  std::string out_dir;
};

// Sample-complexity sweep over (scheme, depth, seed). Writes runs.csv,
// summary.csv (per-depth medians and sparse/dense ratio) and manifest.json.
// Returns kExitTruncated when any run hit the rollout budget.
int cmd_simulate(const SimulateOptions& options);

struct PasskOptions {
  std::string input;
  std::string out_dir;
  std::vector<int> ks = {1, 2, 4, 8, 16, 32, 64, 128};
};

int cmd_passk(const PasskOptions& options);

struct StatsOptions {
  std::string input;
  std::string out_dir;
  double threshold = kDefaultErrorThreshold;
};

int cmd_stats(const StatsOptions& options);

struct SweepThresholdOptions {
  std::string input;
  std::string out_dir;
  std::vector<double> thresholds = {0.5, 0.6, 0.7, 0.8, 0.9};
};

int cmd_sweep_threshold(const SweepThresholdOptions& options);

}  // namespace prefixrl
