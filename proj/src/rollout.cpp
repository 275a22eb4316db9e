#include "prefixrl/rollout.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace prefixrl {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_marker_separator(char c) {
  switch (c) {
    case ':':
    case '.':
    case ',':
    case ')':
    case '-':
      return true;
    default:
      return std::isspace(static_cast<unsigned char>(c)) != 0;
  }
}

// Returns true if text[pos..] starts a "Step <k><sep>" marker. pos must be at
// a word boundary already.
bool is_marker_at(std::string_view text, std::size_t pos) {
  static constexpr std::string_view kWord = "Step";
  if (text.size() - pos < kWord.size() + 1) return false;
  if (text.compare(pos, kWord.size(), kWord) != 0) return false;
  std::size_t i = pos + kWord.size();
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_begin) return false;
  return i == text.size() || is_marker_separator(text[i]);
}

std::vector<std::size_t> find_marker_starts(std::string_view text) {
  std::vector<std::size_t> starts;
  for (std::size_t pos = text.find('S'); pos != std::string_view::npos;
       pos = text.find('S', pos + 1)) {
    if (pos > 0 && is_word_char(text[pos - 1])) continue;
    if (is_marker_at(text, pos)) starts.push_back(pos);
  }
  return starts;
}

}  // namespace

std::vector<StepSpan> segment_text(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("segment_text: empty text");
  const std::vector<std::size_t> starts = find_marker_starts(text);
  std::vector<StepSpan> spans;
  if (starts.size() <= 1) {
    spans.push_back({1, 0, text.size()});
    return spans;
  }
  // Preamble merges into step 1, so the first span always begins at 0.
  spans.push_back({1, 0, starts[1]});
  for (std::size_t k = 1; k < starts.size(); ++k) {
    std::size_t end = k + 1 < starts.size() ? starts[k + 1] : text.size();
    spans.push_back({static_cast<int>(k) + 1, starts[k], end});
  }
  return spans;
}

std::vector<std::size_t> whitespace_token_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  bool in_token = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool ws = std::isspace(static_cast<unsigned char>(text[i])) != 0;
    if (!ws && !in_token) offsets.push_back(i);
    in_token = !ws;
  }
  return offsets;
}

std::vector<int> to_token_bounds(const std::vector<StepSpan>& spans,
                                 const std::vector<std::size_t>& token_offsets,
                                 std::size_t text_size) {
  if (spans.empty()) throw std::invalid_argument("to_token_bounds: no spans");
  if (token_offsets.empty())
    throw std::invalid_argument("to_token_bounds: no tokens");
  for (std::size_t i = 0; i < token_offsets.size(); ++i) {
    if (token_offsets[i] >= text_size)
      throw std::invalid_argument("to_token_bounds: token offset beyond text");
    if (i > 0 && token_offsets[i] <= token_offsets[i - 1])
      throw std::invalid_argument("to_token_bounds: offsets not ascending");
  }

  const int n_tokens = static_cast<int>(token_offsets.size());
  std::vector<int> bounds;
  bounds.push_back(1);
  for (std::size_t k = 1; k < spans.size(); ++k) {
    auto it = std::lower_bound(token_offsets.begin(), token_offsets.end(),
                               spans[k].begin);
    int t = static_cast<int>(it - token_offsets.begin()) + 1;
    // A step whose text maps to zero tokens collapses into its predecessor.
    if (t > bounds.back() && t <= n_tokens) bounds.push_back(t);
  }
  bounds.push_back(n_tokens + 1);
  return bounds;
}

std::optional<int> last_token_index(TokenRange range) {
  if (range.empty()) return std::nullopt;
  return range.end - 1;
}

void Rollout::validate() const {
  if (tokens.empty()) throw std::invalid_argument("rollout: no tokens");
  if (step_bounds.size() < 2)
    throw std::invalid_argument("rollout: missing step bounds");
  if (step_bounds.front() != 1)
    throw std::invalid_argument("rollout: first step bound must be 1");
  if (step_bounds.back() != num_tokens() + 1)
    throw std::invalid_argument("rollout: last step bound must be |tokens|+1");
  for (std::size_t i = 1; i < step_bounds.size(); ++i) {
    if (step_bounds[i] <= step_bounds[i - 1])
      throw std::invalid_argument("rollout: step bounds not strictly increasing");
  }
  if (prompt_len < 0) throw std::invalid_argument("rollout: negative prompt_len");
}

void RolloutGroup::validate() const {
  if (rollouts.size() < 2)
    throw std::invalid_argument("group " + question_id +
                                ": needs at least 2 rollouts");
  for (const Rollout& r : rollouts) r.validate();
}

}  // namespace prefixrl
