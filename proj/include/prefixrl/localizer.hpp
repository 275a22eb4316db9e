#pragma once

#include <optional>
#include <vector>

namespace prefixrl {

// Per-step process-reward scores, one per step, each within [0, 1].
using StepScores = std::vector<double>;

void validate_step_scores(const StepScores& scores, int expected_steps);

// First step whose score falls strictly below the threshold (1-based);
// nullopt when every step passes. The shipped default threshold is 0.8.
inline constexpr double kDefaultErrorThreshold = 0.8;
std::optional<int> first_error(const StepScores& scores, double threshold);

enum class Agreement { match, less, more, fail };

// Compares a predicted first-error index against the ground-truth index.
Agreement classify(std::optional<int> predicted, int truth);

struct AgreementTally {
  long match = 0;
  long less = 0;
  long more = 0;
  long fail = 0;

  void add(Agreement a);
  long total() const { return match + less + more + fail; }
  // "Not more" counts the outcomes where the detector does not overshoot the
  // true first error, i.e. where the extra signal cannot reward a wrong step.
  long not_more() const { return match + less + fail; }
  double not_more_ratio() const {
    return total() == 0 ? 0.0 : static_cast<double>(not_more()) / static_cast<double>(total());
  }
};

struct ScoredSample {
  StepScores scores;
  int truth = 1;  // 1-based ground-truth first-error index
};

// One tally per threshold over the whole corpus.
std::vector<AgreementTally> sweep_thresholds(const std::vector<ScoredSample>& corpus,
                                             const std::vector<double>& thresholds);

}  // namespace prefixrl
