#include "cli/json_line.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace zero_annulus::cli {

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string json_string(std::string_view value) { return nlohmann::json(std::string(value)).dump(); }

std::string json_array(std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out + "]";
}

void JsonLine::key(std::string_view k) {
  if (body_.size() > 1) body_ += ',';
  body_ += json_string(k);
  body_ += ':';
}

JsonLine& JsonLine::field(std::string_view k, double value) {
  key(k);
  body_ += format_number(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, long long value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, bool value) {
  key(k);
  body_ += value ? "true" : "false";
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, std::string_view value) {
  key(k);
  body_ += json_string(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, std::span<const double> values) {
  key(k);
  body_ += json_array(values);
  return *this;
}

JsonLine& JsonLine::raw(std::string_view k, std::string_view json) {
  key(k);
  body_ += json;
  return *this;
}

}  // namespace zero_annulus::cli
