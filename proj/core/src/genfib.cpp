#include "zero_annulus/genfib.hpp"

#include <cmath>
#include <sstream>

namespace zero_annulus {

void require_positive(const FibParams& params) {
  for (double x : {params.a, params.b, params.c}) {
    if (!(std::isfinite(x) && x > 0.0)) {
      throw InvalidParameter("Fibonacci parameters must be finite and strictly positive, got " +
                             to_string(params));
    }
  }
}

void require_positive(const ExactFibParams& params) {
  for (const auto* x : {&params.a, &params.b, &params.c}) {
    if (sgn(*x) <= 0) {
      throw InvalidParameter("Fibonacci parameters must be strictly positive, got " + to_string(params.a) +
                             "," + to_string(params.b) + "," + to_string(params.c));
    }
  }
}

FibParams to_float(const ExactFibParams& params) {
  return {params.a.get_d(), params.b.get_d(), params.c.get_d()};
}

std::string to_string(const FibParams& params) {
  std::ostringstream out;
  out.precision(17);
  out << params.a << ',' << params.b << ',' << params.c;
  return out.str();
}

ExactFibParams parse_fib_params(std::string_view text) {
  std::vector<ExactScalar> values;
  while (true) {
    const auto comma = text.find(',');
    try {
      values.push_back(parse_rational(text.substr(0, comma)));
    } catch (const RationalParseError& e) {
      throw InvalidParameter(e.what());
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.size() != 3) {
    throw InvalidParameter("expected three comma-separated parameters, got " + std::to_string(values.size()));
  }
  ExactFibParams params{values[0], values[1], values[2]};
  require_positive(params);
  return params;
}

ClosedFormRoots closed_form_roots(const FibParams& params) {
  const double ab = params.a * params.b;
  const double abc = ab * params.c;
  const double alpha = 0.5 * (ab + std::sqrt(ab * ab + 4.0 * abc));
  // alpha * beta = -abc; avoids cancellation in (ab - sqrt(...)) / 2.
  return {alpha, -abc / alpha};
}

double fib_closed_form(const FibParams& params, unsigned k) {
  const auto [alpha, beta] = closed_form_roots(params);
  const double ab = params.a * params.b;
  const double scale = (xi(k) == 0 ? params.a : 1.0) / std::pow(ab, static_cast<double>(half_floor(k)));
  const double kk = static_cast<double>(k);
  return scale * (std::pow(alpha, kk) - std::pow(beta, kk)) / (alpha - beta);
}

double fib_log_magnitude(const FibParams& params, unsigned n) {
  if (n == 0) throw std::invalid_argument("fib_log_magnitude requires n >= 1");
  const auto [alpha, beta] = closed_form_roots(params);
  const double ratio_abs = -beta / alpha;  // |beta/alpha| < 1
  const double nn = static_cast<double>(n);

  // (alpha^n - beta^n)/(alpha - beta) = alpha^{n-1} (1 - r^n)/(1 - r), r = beta/alpha < 0.
  double log_correction = -std::log1p(ratio_abs);
  if (xi(n) == 1) {
    log_correction += std::log1p(std::pow(ratio_abs, nn));
  } else {
    log_correction += std::log(-std::expm1(nn * std::log(ratio_abs)));
  }

  const double log_a = std::log(params.a);
  const double log_ab = log_a + std::log(params.b);
  return (xi(n) == 0 ? log_a : 0.0) - static_cast<double>(half_floor(n)) * log_ab +
         (nn - 1.0) * std::log(alpha) + log_correction;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("binomial requires k <= n");
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    row[k + 1] = row[k] * (n - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  return row;
}

ExactScalar lemma_identity_residual(const ExactFibParams& params, unsigned n) {
  require_positive(params);
  if (n == 0) throw std::invalid_argument("identity requires n >= 1");
  auto [lhs, rhs] = lemma_identity_sides(params, n);
  ExactScalar residual = lhs - rhs;
  residual.canonicalize();
  return residual;
}

double lemma_identity_residual(const FibParams& params, unsigned n) {
  require_positive(params);
  if (n == 0) throw std::invalid_argument("identity requires n >= 1");
  const auto [lhs, rhs] = lemma_identity_sides(params, n);
  return (lhs - rhs) / rhs;
}

}  // namespace zero_annulus
