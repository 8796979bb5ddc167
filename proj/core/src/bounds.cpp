#include "zero_annulus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zero_annulus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Q(x) / max(1, x^n) for Q(x) = x^n - sum_{j<n} m_j x^j, together with its
// derivative. On x <= 1 this is Q itself (Horner in x); beyond 1 it is
// 1 - sum m_j y^{n-j} with y = 1/x (Horner in y), which never overflows.
struct ScaledQ {
  double value;
  double derivative;
};

ScaledQ scaled_q(std::span<const double> m, double x) {
  const std::size_t n = m.size();
  if (x <= 1.0) {
    double q = 1.0;
    double dq = 0.0;
    for (std::size_t j = n; j-- > 0;) {
      dq = dq * x + q;
      q = q * x - m[j];
    }
    return {q, dq};
  }
  const double y = 1.0 / x;
  // s(y) = m_0 y^{n-1} + ... + m_{n-1}; g = 1 - y s(y).
  double s = m[0];
  double ds = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    ds = ds * y + s;
    s = s * y + m[j];
  }
  const double g = 1.0 - y * s;
  // dg/dx = (s + y s') y^2
  return {g, (s + y * ds) * y * y};
}

}  // namespace

std::string_view to_string(BoundMethod method) noexcept {
  switch (method) {
    case BoundMethod::cauchy_disk: return "cauchy";
    case BoundMethod::diaz_barrero: return "db";
    case BoundMethod::t_fib: return "tfib";
    case BoundMethod::general: return "general";
  }
  return "unknown";
}

CauchyResult cauchy_radius(const Polynomial& poly) {
  require_nonconstant(poly, "cauchy_radius");
  const std::size_t n = poly.degree();
  const double lead = std::abs(poly.leading());
  std::vector<double> m(n);
  double max_m = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    m[j] = std::abs(poly.coeff(j)) / lead;
    max_m = std::max(max_m, m[j]);
  }
  if (max_m == 0.0) return {0.0, 0.0, 0};

  double lo = 0.0;
  double hi = 1.0 + max_m;
  int iterations = 0;
  for (; iterations < 120 && hi - lo >= 1e-15 * (1.0 + hi); ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (scaled_q(m, mid).value <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  ScaledQ q = scaled_q(m, x);
  for (int step = 0; step < 8 && q.value != 0.0 && q.derivative > 0.0; ++step) {
    const double next = x - q.value / q.derivative;
    if (!(next >= lo && next <= hi)) break;
    const ScaledQ qn = scaled_q(m, next);
    ++iterations;
    if (std::abs(qn.value) >= std::abs(q.value)) break;
    x = next;
    q = qn;
  }
  return {x, q.value, iterations};
}

Annulus cauchy_annulus(const Polynomial& poly) {
  return {0.0, cauchy_radius(poly).radius, BoundMethod::cauchy_disk, std::nullopt, std::nullopt};
}

AnnulusEvaluator::AnnulusEvaluator(const Polynomial& poly) : degree_(static_cast<unsigned>(poly.degree())) {
  require_nonconstant(poly, "annulus bound");
  log_abs_coeff_.reserve(poly.degree() + 1);
  for (const Complex& c : poly.coeffs()) {
    const double mag = std::abs(c);
    log_abs_coeff_.push_back(mag == 0.0 ? -kInf : std::log(mag));
  }
  const auto row = binomial_row(degree_);
  log_binomial_.reserve(row.size());
  for (const auto& c : row) log_binomial_.push_back(log_abs(c));
}

bool AnnulusEvaluator::has_zero_constant_term() const noexcept { return log_abs_coeff_.front() == -kInf; }

AnnulusEvaluator::LogFactors AnnulusEvaluator::log_factors(const FibParams& params, BoundForm form) const {
  require_positive(params);
  const unsigned n = degree_;
  const double nn = n;
  const double ab = params.a * params.b;
  const double log_a = std::log(params.a);
  const double log_ab = std::log(ab);
  const double log_c = std::log(params.c);
  const double log_ab_c = std::log(ab + params.c);
  const double log_ab_2c = std::log(ab + 2.0 * params.c);

  LogFactors out;
  out.log_f4n = fib_log_magnitude(params, 4 * n);
  out.log_denominator.assign(n + 1, 0.0);

  // ln(abc + c^2) = ln c + ln(ab + c)
  const double log_head = nn * (log_ab_c + log_c);
  for (unsigned k = 1; k <= n; ++k) {
    const double kk = k;
    double d = log_head + (xi(k) ? log_a : 0.0) + half_floor(k) * log_ab + fib_log_magnitude(params, k) +
               log_binomial_[k];
    if (form == BoundForm::proof_intermediate) d += kk * (log_ab_2c - log_ab_c - log_c);
    out.log_denominator[k] = d;
  }
  out.prefactor = form == BoundForm::statement ? (ab * params.c + params.c * params.c) / (ab + 2.0 * params.c) : 1.0;
  return out;
}

BoundSide AnnulusEvaluator::outer(const FibParams& params, BoundForm form) const {
  const unsigned n = degree_;
  const auto factors = log_factors(params, form);
  const double log_lead = log_abs_coeff_[n];

  // Candidates are compared as logs; exp() of an extreme bound may leave double range.
  std::vector<double> log_terms(n);
  unsigned best = 1;
  for (unsigned k = 1; k <= n; ++k) {
    const double log_ratio = log_abs_coeff_[n - k] - log_lead;
    log_terms[k - 1] = log_ratio == -kInf ? -kInf : (factors.log_f4n - factors.log_denominator[k] + log_ratio) / k;
    if (log_terms[k - 1] > log_terms[best - 1]) best = k;
  }
  return finish_side(std::move(log_terms), best, factors.prefactor);
}

BoundSide AnnulusEvaluator::inner(const FibParams& params, BoundForm form) const {
  const unsigned n = degree_;
  const auto factors = log_factors(params, form);
  const double log_constant = log_abs_coeff_[0];

  double prefactor = 1.0;
  if (form == BoundForm::statement) {
    // (uv + 2w) / (uvw + w^2), formed directly rather than as a reciprocal.
    const double uv = params.a * params.b;
    prefactor = (uv + 2.0 * params.c) / (uv * params.c + params.c * params.c);
  }
  std::vector<double> log_terms(n);
  unsigned best = 1;
  for (unsigned k = 1; k <= n; ++k) {
    double log_term = kInf;  // a_k = 0: index skipped
    if (log_abs_coeff_[k] != -kInf) {
      log_term = log_constant == -kInf
                     ? -kInf
                     : (factors.log_denominator[k] - factors.log_f4n + log_constant - log_abs_coeff_[k]) / k;
    }
    log_terms[k - 1] = log_term;
    if (log_term < log_terms[best - 1]) best = k;
  }
  return finish_side(std::move(log_terms), best, prefactor);
}

BoundSide AnnulusEvaluator::finish_side(std::vector<double> log_terms, unsigned best, double prefactor) {
  BoundSide side;
  side.prefactor = prefactor;
  side.k_extremal = best;
  side.terms.reserve(log_terms.size());
  for (double l : log_terms) side.terms.push_back(std::exp(l));
  side.radius = prefactor * side.terms[best - 1];
  side.log_radius = std::log(prefactor) + log_terms[best - 1];
  return side;
}

BoundReport general_annulus(const Polynomial& poly, const FibParams& outer, const FibParams& inner, BoundForm form) {
  require_nonconstant(poly, "general_annulus");
  require_positive(outer);
  require_positive(inner);
  const AnnulusEvaluator evaluator(poly);
  auto outer_side = evaluator.outer(outer, form);
  auto inner_side = evaluator.inner(inner, form);

  BoundReport report;
  report.annulus = {inner_side.radius, outer_side.radius, BoundMethod::general, outer, inner};
  report.log_r1 = inner_side.log_radius;
  report.log_r2 = outer_side.log_radius;
  report.outer_terms = std::move(outer_side.terms);
  report.inner_terms = std::move(inner_side.terms);
  report.k_outer = outer_side.k_extremal;
  report.k_inner = inner_side.k_extremal;
  report.prefactor_outer = outer_side.prefactor;
  report.prefactor_inner = inner_side.prefactor;
  return report;
}

BoundReport diaz_barrero_annulus(const Polynomial& poly) {
  const FibParams ones{1.0, 1.0, 1.0};
  auto report = general_annulus(poly, ones, ones);
  report.annulus.method = BoundMethod::diaz_barrero;
  return report;
}

BoundReport t_fib_annulus(const Polynomial& poly, double t) {
  if (!(std::isfinite(t) && t > 0.0)) throw InvalidParameter("t must be finite and strictly positive");
  const FibParams params{t, t, 1.0};
  auto report = general_annulus(poly, params, params);
  report.annulus.method = BoundMethod::t_fib;
  return report;
}

TightnessMetrics annulus_width_metrics(const Annulus& annulus, const RootSet& roots) {
  if (roots.roots.empty()) throw std::invalid_argument("annulus_width_metrics needs a nonempty root set");
  double min_mod = kInf;
  double max_mod = 0.0;
  for (const Complex& z : roots.roots) {
    min_mod = std::min(min_mod, std::abs(z));
    max_mod = std::max(max_mod, std::abs(z));
  }
  TightnessMetrics m;
  m.inner_ratio = annulus.r1 == 0.0 ? 0.0 : annulus.r1 / min_mod;
  m.outer_ratio = annulus.r2 == 0.0 ? (max_mod == 0.0 ? 1.0 : kInf) : max_mod / annulus.r2;
  m.log_width = annulus.r1 == 0.0 ? kInf : std::log(annulus.r2 / annulus.r1);
  return m;
}

}  // namespace zero_annulus
