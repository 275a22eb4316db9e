#include "prefixrl/records.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace prefixrl {

using nlohmann::json;

namespace {

json parse_json_line(const std::string& line, std::size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw RecordError(line_no, "<line>", "invalid JSON");
  if (!j.is_object()) throw RecordError(line_no, "<line>", "expected a JSON object");
  return j;
}

template <typename T>
T require(const json& j, const char* field, std::size_t line_no) {
  if (!j.contains(field)) throw RecordError(line_no, field, "missing");
  try {
    return j.at(field).get<T>();
  } catch (const json::exception&) {
    throw RecordError(line_no, field, "wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* field, std::size_t line_no) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  try {
    return j.at(field).get<T>();
  } catch (const json::exception&) {
    throw RecordError(line_no, field, "wrong type");
  }
}

}  // namespace

RolloutRecord parse_rollout_record(const std::string& json_line, std::size_t line_no) {
  const json j = parse_json_line(json_line, line_no);

  RolloutRecord record;
  record.line = line_no;
  record.question_id = require<std::string>(j, "question_id", line_no);
  if (record.question_id.empty())
    throw RecordError(line_no, "question_id", "empty");
  record.rollout.correct = require<bool>(j, "correct", line_no);
  record.rollout.prompt_len = require<int>(j, "prompt_len", line_no);
  if (record.rollout.prompt_len < 0)
    throw RecordError(line_no, "prompt_len", "negative");

  const bool has_text = j.contains("text");
  const bool has_tokens = j.contains("tokens");
  if (!has_text && !has_tokens)
    throw RecordError(line_no, "text", "need either 'text' or 'tokens'");

  if (has_text) {
    const std::string text = require<std::string>(j, "text", line_no);
    if (text.empty()) throw RecordError(line_no, "text", "empty");

    std::vector<std::size_t> offsets;
    if (j.contains("token_offsets")) {
      const auto raw = require<std::vector<long>>(j, "token_offsets", line_no);
      offsets.reserve(raw.size());
      for (long v : raw) {
        if (v < 0) throw RecordError(line_no, "token_offsets", "negative offset");
        offsets.push_back(static_cast<std::size_t>(v));
      }
    } else {
      offsets = whitespace_token_offsets(text);
    }
    if (offsets.empty())
      throw RecordError(line_no, "text", "no tokens (whitespace-only text?)");

    if (has_tokens) {
      record.rollout.tokens = require<std::vector<std::int64_t>>(j, "tokens", line_no);
      if (record.rollout.tokens.size() != offsets.size())
        throw RecordError(line_no, "tokens", "length differs from token_offsets");
    } else {
      record.rollout.tokens.resize(offsets.size());
      for (std::size_t i = 0; i < offsets.size(); ++i)
        record.rollout.tokens[i] = static_cast<std::int64_t>(i);
    }

    try {
      const auto spans = segment_text(text);
      record.rollout.step_bounds = to_token_bounds(spans, offsets, text.size());
    } catch (const std::invalid_argument& e) {
      throw RecordError(line_no, "token_offsets", e.what());
    }
  } else {
    record.rollout.tokens = require<std::vector<std::int64_t>>(j, "tokens", line_no);
    if (record.rollout.tokens.empty())
      throw RecordError(line_no, "tokens", "empty");
    if (j.contains("token_offsets"))
      throw RecordError(line_no, "token_offsets", "meaningless without 'text'");
    record.rollout.step_bounds = {1, record.rollout.num_tokens() + 1};
  }

  try {
    record.rollout.validate();
  } catch (const std::invalid_argument& e) {
    throw RecordError(line_no, "<rollout>", e.what());
  }

  record.step_scores = optional_field<StepScores>(j, "step_scores", line_no);
  if (record.step_scores.has_value()) {
    try {
      validate_step_scores(*record.step_scores, record.rollout.num_steps());
    } catch (const std::invalid_argument& e) {
      throw RecordError(line_no, "step_scores", e.what());
    }
  }

  record.first_error_truth = optional_field<int>(j, "first_error_truth", line_no);
  if (record.first_error_truth.has_value() &&
      (*record.first_error_truth < 1 ||
       *record.first_error_truth > record.rollout.num_steps()))
    throw RecordError(line_no, "first_error_truth", "outside 1..M");

  return record;
}

std::vector<RolloutRecord> read_rollout_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::vector<RolloutRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(parse_rollout_record(line, line_no));
  }
  return records;
}

std::vector<GroupedRecords> group_by_question(const std::vector<RolloutRecord>& records) {
  std::vector<GroupedRecords> groups;
  std::map<std::string, std::size_t> index;
  for (const RolloutRecord& r : records) {
    auto [it, inserted] = index.emplace(r.question_id, groups.size());
    if (inserted) {
      groups.emplace_back();
      groups.back().group.question_id = r.question_id;
    }
    GroupedRecords& g = groups[it->second];
    g.group.rollouts.push_back(r.rollout);
    g.step_scores.push_back(r.step_scores);
    g.truths.push_back(r.first_error_truth);
    g.lines.push_back(r.line);
  }
  return groups;
}

namespace {

std::vector<EvalRecord> read_eval_csv(std::istream& in) {
  std::vector<EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    if (line_no == 1 && line.rfind("question_id", 0) == 0) continue;  // header
    std::stringstream ss(line);
    EvalRecord r;
    std::string n_str, c_str;
    if (!std::getline(ss, r.question_id, ',') || !std::getline(ss, n_str, ',') ||
        !std::getline(ss, c_str))
      throw RecordError(line_no, "<line>", "expected question_id,n,c");
    try {
      r.n = std::stoi(n_str);
      r.c = std::stoi(c_str);
    } catch (const std::exception&) {
      throw RecordError(line_no, "n", "not an integer");
    }
    if (r.n < 1) throw RecordError(line_no, "n", "must be >= 1");
    if (r.c < 0 || r.c > r.n) throw RecordError(line_no, "c", "need 0 <= c <= n");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

std::vector<EvalRecord> read_eval_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);

  // Peek the first non-blank character: '{' means JSON lines, else CSV.
  char first = 0;
  in >> std::ws;
  in.get(first);
  in.seekg(0);
  if (first != '{') return read_eval_csv(in);

  std::vector<EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = parse_json_line(line, line_no);
    EvalRecord r;
    r.question_id = require<std::string>(j, "question_id", line_no);
    r.n = require<int>(j, "n", line_no);
    r.c = require<int>(j, "c", line_no);
    if (r.n < 1) throw RecordError(line_no, "n", "must be >= 1");
    if (r.c < 0 || r.c > r.n) throw RecordError(line_no, "c", "need 0 <= c <= n");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace prefixrl
