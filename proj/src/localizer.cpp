#include "prefixrl/localizer.hpp"

#include <stdexcept>
#include <string>

namespace prefixrl {

void validate_step_scores(const StepScores& scores, int expected_steps) {
  if (static_cast<int>(scores.size()) != expected_steps)
    throw std::invalid_argument("step_scores: got " + std::to_string(scores.size()) +
                                " scores for " + std::to_string(expected_steps) + " steps");
  for (double s : scores) {
    if (!(s >= 0.0 && s <= 1.0))
      throw std::invalid_argument("step_scores: score outside [0,1]");
  }
}

std::optional<int> first_error(const StepScores& scores, double threshold) {
  if (scores.empty()) throw std::invalid_argument("first_error: empty score vector");
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] < threshold) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

Agreement classify(std::optional<int> predicted, int truth) {
  if (!predicted.has_value()) return Agreement::fail;
  if (*predicted == truth) return Agreement::match;
  return *predicted < truth ? Agreement::less : Agreement::more;
}

void AgreementTally::add(Agreement a) {
  switch (a) {
    case Agreement::match: ++match; break;
    case Agreement::less: ++less; break;
    case Agreement::more: ++more; break;
    case Agreement::fail: ++fail; break;
  }
}

std::vector<AgreementTally> sweep_thresholds(const std::vector<ScoredSample>& corpus,
                                             const std::vector<double>& thresholds) {
  if (corpus.empty()) throw std::invalid_argument("sweep_thresholds: empty corpus");
  std::vector<AgreementTally> tallies(thresholds.size());
  for (const ScoredSample& sample : corpus) {
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      tallies[j].add(classify(first_error(sample.scores, thresholds[j]), sample.truth));
    }
  }
  return tallies;
}

}  // namespace prefixrl
