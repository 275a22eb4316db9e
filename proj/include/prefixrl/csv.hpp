#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace prefixrl {

// Shortest round-trip decimal representation (via std::to_chars), so dumps
// are byte-stable and parse back to the identical double.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);

  void header(const std::vector<std::string>& names);
  void begin_row();
  void end_row();
  CsvWriter& field(const std::string& value);
  CsvWriter& field(const char* value);
  CsvWriter& field(double value);
  CsvWriter& field(long value);
  CsvWriter& field(int value);
  CsvWriter& field(std::uint64_t value);

  void close();

 private:
  std::ofstream out_;
  std::string path_;
  bool row_started_ = false;
};

}  // namespace prefixrl
