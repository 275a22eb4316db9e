#include "prefixrl/eval_metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace prefixrl {

double pass_at_k(int n, int c, int k) {
  if (n < 1) throw std::invalid_argument("pass_at_k: n must be >= 1");
  if (c < 0 || c > n) throw std::invalid_argument("pass_at_k: need 0 <= c <= n");
  if (k < 1 || k > n) throw std::invalid_argument("pass_at_k: need 1 <= K <= n");
  if (c == 0) return 0.0;
  if (n - c < k) return 1.0;  // every K-subset contains a correct sample
  double miss = 1.0;
  for (int i = 0; i < k; ++i)
    miss *= static_cast<double>(n - c - i) / static_cast<double>(n - i);
  return std::clamp(1.0 - miss, 0.0, 1.0);
}

double pass_at_k(const EvalRecord& record, int k) {
  return pass_at_k(record.n, record.c, k);
}

double dataset_pass_at_k(const std::vector<EvalRecord>& records, int k) {
  if (records.empty()) throw std::invalid_argument("dataset_pass_at_k: no records");
  double sum = 0.0;
  for (const EvalRecord& r : records) sum += pass_at_k(r, k);
  return sum / static_cast<double>(records.size());
}

void PrefixStatRecord::validate() const {
  if (total_steps < 1)
    throw std::invalid_argument("prefix stat: total_steps must be >= 1");
  if (first_error_step < 1 || first_error_step > total_steps)
    throw std::invalid_argument("prefix stat: need 1 <= M_err <= M_o");
}

PrefixStats prefix_stats(const std::vector<PrefixStatRecord>& records) {
  if (records.empty()) throw std::invalid_argument("prefix_stats: no records");
  PrefixStats stats;
  long with_correct = 0;
  double ratio_sum = 0.0;
  for (const PrefixStatRecord& r : records) {
    r.validate();
    if (r.first_error_step > 1) ++with_correct;
    ratio_sum += static_cast<double>(r.first_error_step - 1) /
                 static_cast<double>(r.total_steps);
  }
  stats.fraction_with_correct_step =
      static_cast<double>(with_correct) / static_cast<double>(records.size());
  stats.mean_correct_step_ratio = ratio_sum / static_cast<double>(records.size());
  return stats;
}

}  // namespace prefixrl
