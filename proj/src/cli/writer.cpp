#include "fqwell/cli/writer.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fqwell::cli {

std::string format_number(double value, int digits) {
  if (!std::isfinite(value)) return "null";
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                    std::chars_format::general, digits);
  return {buffer.data(), result.ptr};
}

void JsonWriter::raw(std::string_view text) { out_ << text; }

void JsonWriter::newline_indent() {
  out_ << '\n';
  for (std::size_t i = 0; i < stack_.size(); ++i) out_ << "  ";
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& top = stack_.back();
  if (!top.empty) raw(top.inline_elements ? ", " : ",");
  if (!top.inline_elements) newline_indent();
  top.empty = false;
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  raw("{");
  stack_.push_back({false, false, true});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool empty = stack_.back().empty;
  stack_.pop_back();
  if (!empty) newline_indent();
  raw("}");
  if (stack_.empty()) raw("\n");
  return *this;
}

JsonWriter& JsonWriter::begin_array(bool inline_elements) {
  before_value();
  raw("[");
  stack_.push_back({true, inline_elements, true});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const Frame frame = stack_.back();
  stack_.pop_back();
  if (!frame.empty && !frame.inline_elements) newline_indent();
  raw("]");
  if (stack_.empty()) raw("\n");
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  before_value();
  write_string(name);
  raw(": ");
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value();
  raw(format_number(v, kJsonDigits));
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value();
  raw(std::to_string(v));
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_value();
  write_string(v);
  return *this;
}

void JsonWriter::write_string(std::string_view v) {
  out_ << '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      default: out_ << c;
    }
  }
  out_ << '"';
}

JsonWriter& JsonWriter::value(bool v) {
  before_value();
  raw(v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_value();
  raw("null");
  return *this;
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (const auto& c : columns) cell(std::string_view(c));
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::cell(double v) {
  separator();
  if (std::isfinite(v)) out_ << format_number(v, kCsvDigits);
  return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
  separator();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::cell(std::string_view v) {
  separator();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::empty_cell() {
  separator();
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

}  // namespace fqwell::cli
