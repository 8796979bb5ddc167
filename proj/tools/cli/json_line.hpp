#pragma once

#include <span>
#include <string>
#include <string_view>

namespace zero_annulus::cli {

/// 17 significant digits; non-finite values become `null`.
std::string format_number(double value);

/// Builds one JSON object on a single line. Keys are emitted in insertion
/// order so records diff cleanly.
class JsonLine {
 public:
  JsonLine& field(std::string_view key, double value);
  JsonLine& field(std::string_view key, long long value);
  JsonLine& field(std::string_view key, int value) { return field(key, static_cast<long long>(value)); }
  JsonLine& field(std::string_view key, unsigned value) { return field(key, static_cast<long long>(value)); }
  JsonLine& field(std::string_view key, bool value);
  JsonLine& field(std::string_view key, std::string_view value);
  JsonLine& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
  JsonLine& field(std::string_view key, std::span<const double> values);
  /// Inserts already-serialized JSON.
  JsonLine& raw(std::string_view key, std::string_view json);

  std::string str() const { return body_ + "}"; }

 private:
  void key(std::string_view k);
  std::string body_ = "{";
};

std::string json_array(std::span<const double> values);
std::string json_string(std::string_view value);

}  // namespace zero_annulus::cli
