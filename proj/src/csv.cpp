#include "prefixrl/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace prefixrl {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  if (result.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, result.ptr);
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + path);
}

void CsvWriter::header(const std::vector<std::string>& names) {
  begin_row();
  for (const std::string& n : names) field(n);
  end_row();
}

void CsvWriter::begin_row() { row_started_ = false; }

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

CsvWriter& CsvWriter::field(const std::string& value) {
  if (row_started_) out_ << ',';
  out_ << value;
  row_started_ = true;
  return *this;
}

CsvWriter& CsvWriter::field(const char* value) { return field(std::string(value)); }
CsvWriter& CsvWriter::field(double value) { return field(format_double(value)); }
CsvWriter& CsvWriter::field(long value) { return field(std::to_string(value)); }
CsvWriter& CsvWriter::field(int value) { return field(std::to_string(value)); }
CsvWriter& CsvWriter::field(std::uint64_t value) { return field(std::to_string(value)); }

void CsvWriter::close() {
  out_.close();
  if (!out_) throw std::runtime_error("write failed: " + path_);
}

}  // namespace prefixrl
