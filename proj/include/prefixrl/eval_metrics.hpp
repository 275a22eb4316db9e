#pragma once

#include <string>
#include <vector>

namespace prefixrl {

// Per-question sampling outcome: n attempts drawn, c of them correct.
struct EvalRecord {
  std::string question_id;
  int n = 1;
  int c = 0;
};

// Unbiased Pass@K estimate 1 - C(n-c, K) / C(n, K), evaluated as a stable
// iterative product and clamped to [0, 1].
double pass_at_k(int n, int c, int k);
double pass_at_k(const EvalRecord& record, int k);

// Unweighted mean over questions.
double dataset_pass_at_k(const std::vector<EvalRecord>& records, int k);

// First-error position of one incorrect response: steps before it are correct.
struct PrefixStatRecord {
  int first_error_step = 1;  // M_err, 1-based
  int total_steps = 1;       // M_o

  void validate() const;
};

struct PrefixStats {
  double fraction_with_correct_step = 0.0;  // share of records with M_err > 1
  double mean_correct_step_ratio = 0.0;     // mean of (M_err - 1) / M_o
};

PrefixStats prefix_stats(const std::vector<PrefixStatRecord>& records);

}  // namespace prefixrl
