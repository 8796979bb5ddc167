#pragma once

// Generalized Fibonacci numbers F_n^{(a,b,c)}:
//   F_0 = 0, F_1 = 1,
//   F_n = a F_{n-1} + c F_{n-2}  (n even),
//   F_n = b F_{n-1} + c F_{n-2}  (n odd).
// The same triple type parameterizes the outer (a,b,c) and inner (u,v,w)
// bounds, and (t,t,1) gives the t-Fibonacci numbers.

#include <string>
#include <vector>

#include "zero_annulus/rational.hpp"

namespace zero_annulus {

template <class Scalar>
struct BasicFibParams {
  Scalar a;
  Scalar b;
  Scalar c;

  friend bool operator==(const BasicFibParams&, const BasicFibParams&) = default;
};

using FibParams = BasicFibParams<double>;
using ExactFibParams = BasicFibParams<ExactScalar>;

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidParameter unless a, b, c are all finite and strictly positive.
void require_positive(const FibParams& params);
void require_positive(const ExactFibParams& params);

FibParams to_float(const ExactFibParams& params);
std::string to_string(const FibParams& params);

/// Parses "a,b,c"; each entry may be a rational string such as "3/8".
ExactFibParams parse_fib_params(std::string_view text);

/// k - 2 floor(k/2).
constexpr unsigned xi(unsigned k) noexcept { return k & 1u; }
constexpr unsigned half_floor(unsigned k) noexcept { return k >> 1; }

template <class Scalar>
Scalar pow_uint(Scalar base, unsigned exponent) {
  Scalar result{1};
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

/// Forward iteration of the recurrence. Exact when Scalar is ExactScalar.
template <class Scalar>
Scalar fib_recurrence(const BasicFibParams<Scalar>& params, unsigned n) {
  if (n == 0) return Scalar{0};
  Scalar prev{0};
  Scalar curr{1};
  for (unsigned m = 2; m <= n; ++m) {
    Scalar next = ((m % 2 == 0) ? params.a : params.b) * curr + params.c * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

/// F_0..F_n in one pass.
template <class Scalar>
std::vector<Scalar> fib_sequence(const BasicFibParams<Scalar>& params, unsigned n) {
  std::vector<Scalar> seq(n + 1, Scalar{0});
  if (n >= 1) seq[1] = Scalar{1};
  for (unsigned m = 2; m <= n; ++m) {
    seq[m] = ((m % 2 == 0) ? params.a : params.b) * seq[m - 1] + params.c * seq[m - 2];
  }
  return seq;
}

/// Roots of x^2 - ab x - abc.
struct ClosedFormRoots {
  double alpha;
  double beta;
};
ClosedFormRoots closed_form_roots(const FibParams& params);

/// a^{1-xi(k)} / (ab)^{floor(k/2)} * (alpha^k - beta^k) / (alpha - beta).
double fib_closed_form(const FibParams& params, unsigned k);

/// ln F_n without forming F_n, so it stays finite long after F_n overflows.
/// Requires n >= 1.
double fib_log_magnitude(const FibParams& params, unsigned n);

/// Exact C(n, k); throws std::invalid_argument when k > n.
BigInt binomial(unsigned n, unsigned k);

/// C(n, 0..n) by the multiplicative recurrence.
std::vector<BigInt> binomial_row(unsigned n);

template <class Scalar>
Scalar to_scalar(const BigInt& x);
template <>
inline double to_scalar<double>(const BigInt& x) { return x.get_d(); }
template <>
inline ExactScalar to_scalar<ExactScalar>(const BigInt& x) { return ExactScalar(x); }

/// Both sides of
///   sum_{k=1}^n (ab+c)^{n-k} (ab+2c)^k a^{xi(k)} (ab)^{floor(k/2)} c^{n-k} F_k C(n,k) = F_{4n}.
template <class Scalar>
struct IdentitySides {
  Scalar lhs;
  Scalar rhs;
};

template <class Scalar>
IdentitySides<Scalar> lemma_identity_sides(const BasicFibParams<Scalar>& params, unsigned n) {
  const auto fib = fib_sequence(params, 4 * n);
  const Scalar ab = params.a * params.b;
  const Scalar ab_c = ab + params.c;
  const Scalar ab_2c = ab + params.c + params.c;
  const auto binom = binomial_row(n);

  Scalar lhs{0};
  for (unsigned k = 1; k <= n; ++k) {
    Scalar term = pow_uint(ab_c, n - k) * pow_uint(ab_2c, k) * pow_uint(params.c, n - k);
    if (xi(k) != 0) term *= params.a;
    term *= pow_uint(ab, half_floor(k));
    term *= fib[k];
    term *= to_scalar<Scalar>(binom[k]);
    lhs += term;
  }
  return {std::move(lhs), fib[4 * n]};
}

/// Exact LHS - RHS; zero for every positive rational triple.
ExactScalar lemma_identity_residual(const ExactFibParams& params, unsigned n);

/// (LHS - RHS) / RHS in double precision. Overflows for large n; use the
/// exact overload there.
double lemma_identity_residual(const FibParams& params, unsigned n);

}  // namespace zero_annulus
