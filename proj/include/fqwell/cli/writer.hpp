#pragma once

// Deterministic text emitters. Numbers go through std::to_chars, which is
// locale independent; JSON uses 17 significant digits (round-trips every
// double), CSV uses 12.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fqwell::cli {

inline constexpr int kJsonDigits = 17;
inline constexpr int kCsvDigits = 12;

/// Shortest general-format rendering with `digits` significant digits;
/// non-finite values become "null" (JSON) and are left to callers otherwise.
std::string format_number(double value, int digits);

class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  /// An inline array keeps all of its elements on one line.
  JsonWriter& begin_array(bool inline_elements = false);
  JsonWriter& end_array();

  JsonWriter& key(std::string_view name);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::size_t v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(bool v);
  JsonWriter& null();

  template <typename T>
  JsonWriter& value(const std::optional<T>& v) {
    return v ? value(*v) : null();
  }

  template <typename T>
  JsonWriter& field(std::string_view name, const T& v) {
    key(name);
    return value(v);
  }

 private:
  struct Frame {
    bool is_array = false;
    bool inline_elements = false;
    bool empty = true;
  };

  void before_value();
  void newline_indent();
  void raw(std::string_view text);
  void write_string(std::string_view v);

  std::ostream& out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);

  CsvWriter& cell(double v);
  CsvWriter& cell(std::int64_t v);
  CsvWriter& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
  CsvWriter& cell(std::size_t v) { return cell(static_cast<std::int64_t>(v)); }
  CsvWriter& cell(std::string_view v);
  CsvWriter& empty_cell();
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool row_started_ = false;
};

}  // namespace fqwell::cli
