#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefixrl {

// One contiguous chunk of response text belonging to a single reasoning step.
// Spans returned by segment_text cover the input without gaps or overlap.
struct StepSpan {
  int step = 0;        // 1-based, consecutive in order of appearance
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
};

// Splits step-enumerated text on "Step <k>" markers. A marker is the literal
// word "Step" at a word boundary, followed by optional blanks, digits and a
// separator. Literal step numbers are ignored; steps are renumbered 1..M in
// order of appearance. Text before the first marker merges into step 1, and
// text without any marker is a single step.
std::vector<StepSpan> segment_text(std::string_view text);

// Character start offsets of whitespace-delimited tokens; the fallback when
// no external tokenization is supplied.
std::vector<std::size_t> whitespace_token_offsets(std::string_view text);

// Maps character-level step spans onto token boundaries. token_offsets are
// ascending per-token character start offsets covering the text. Each step
// boundary snaps to the first token starting at or after the span start, so a
// straddling token stays with the earlier step. Steps left without any token
// are merged into their predecessor. Returns 1-based step bounds
// t_1..t_{M+1} with t_1 = 1 and t_{M+1} = n_tokens + 1.
std::vector<int> to_token_bounds(const std::vector<StepSpan>& spans,
                                 const std::vector<std::size_t>& token_offsets,
                                 std::size_t text_size);

// Half-open 1-based token index range [begin, end).
struct TokenRange {
  int begin = 1;
  int end = 1;
  int size() const { return end - begin; }
  bool empty() const { return end <= begin; }
};

// Index of the last token of a range; nullopt for an empty range (which means
// there is no token to attach a reward to).
std::optional<int> last_token_index(TokenRange range);

// A single response viewed at token and step level.
struct Rollout {
  std::vector<std::int64_t> tokens;
  std::vector<int> step_bounds;  // 1-based ascending, first 1, last |tokens|+1
  bool correct = false;
  int prompt_len = 0;

  int num_tokens() const { return static_cast<int>(tokens.size()); }
  int num_steps() const { return static_cast<int>(step_bounds.size()) - 1; }
  // 1-based token bounds of step m (1-based), end exclusive.
  int step_begin(int m) const { return step_bounds[m - 1]; }
  int step_end(int m) const { return step_bounds[m]; }

  void validate() const;  // throws std::invalid_argument on broken invariants
};

// G >= 2 responses to the same question.
struct RolloutGroup {
  std::string question_id;
  std::vector<Rollout> rollouts;

  int size() const { return static_cast<int>(rollouts.size()); }
  void validate() const;
};

}  // namespace prefixrl
