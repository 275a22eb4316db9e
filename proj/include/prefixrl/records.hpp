#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prefixrl/eval_metrics.hpp"
#include "prefixrl/localizer.hpp"
#include "prefixrl/rollout.hpp"

namespace prefixrl {

// Malformed input line; carries the 1-based line number and offending field.
class RecordError : public std::runtime_error {
 public:
  RecordError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", field '" + field +
                           "': " + message),
        line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// One ingested rollout line:
//   {"question_id": str, "text": str | "tokens": [int], "token_offsets": [int]?,
//    "correct": bool, "prompt_len": int, "step_scores": [float]?,
//    "first_error_truth": int?}
// With "text", step boundaries come from the step markers; token offsets
// default to whitespace tokenization. A bare "tokens" record has no text to
// segment and becomes a single step.
struct RolloutRecord {
  std::string question_id;
  Rollout rollout;
  std::optional<StepScores> step_scores;
  std::optional<int> first_error_truth;
  std::size_t line = 0;  // 1-based source line, for error reporting
};

RolloutRecord parse_rollout_record(const std::string& json_line, std::size_t line_no);

// Reads a whole JSON Lines file; blank lines are skipped.
std::vector<RolloutRecord> read_rollout_records(const std::string& path);

// Records of one question, grouped in first-appearance order with the
// per-rollout extras kept parallel to group.rollouts.
struct GroupedRecords {
  RolloutGroup group;
  std::vector<std::optional<StepScores>> step_scores;
  std::vector<std::optional<int>> truths;
  std::vector<std::size_t> lines;
};

std::vector<GroupedRecords> group_by_question(const std::vector<RolloutRecord>& records);

// Pass@K input: {"question_id": str, "n": int, "c": int} JSON lines, or a CSV
// with header question_id,n,c.
std::vector<EvalRecord> read_eval_records(const std::string& path);

}  // namespace prefixrl
