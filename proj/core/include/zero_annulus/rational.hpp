#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zero_annulus {

/// Arbitrary-precision rational; all arithmetic on it is exact.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "p/q", integers, and decimals with an optional exponent
/// ("0.375", "-1.5e-3"). Decimals are converted exactly, so "0.1" is 1/10.
ExactScalar parse_rational(std::string_view text);

/// Natural log of |x|; -inf for zero. Safe for values far outside double range.
double log_abs(const BigInt& x);
double log_abs(const ExactScalar& x);

std::string to_string(const ExactScalar& x);

}  // namespace zero_annulus
