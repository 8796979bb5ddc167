#include "zero_annulus/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace zero_annulus {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw RationalParseError("not a rational number: '" + std::string(whole) + "'");
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

ExactScalar parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt exp = parse_integer(s.substr(e + 1), whole);
    if (!exp.fits_slong_p() || std::abs(exp.get_si()) > 4096) {
      throw RationalParseError("exponent out of range: '" + std::string(whole) + "'");
    }
    exponent = exp.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto int_part = s.substr(0, dot);
    const auto frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw RationalParseError("not a rational number: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw RationalParseError("not a rational number: '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  ExactScalar value{BigInt(digits, 10)};
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) {
    value *= power;
  } else {
    value /= power;
  }
  value.canonicalize();
  return negative ? ExactScalar(-value) : value;
}

}  // namespace

ExactScalar parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw RationalParseError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw RationalParseError("zero denominator: '" + std::string(text) + "'");
    ExactScalar q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text, text);
}

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::abs(mantissa)) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_abs(const ExactScalar& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  return log_abs(BigInt(x.get_num())) - log_abs(BigInt(x.get_den()));
}

std::string to_string(const ExactScalar& x) { return x.get_str(10); }

}  // namespace zero_annulus
