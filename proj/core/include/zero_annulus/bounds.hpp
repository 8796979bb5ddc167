#pragma once

#include <span>
#include <vector>

#include "zero_annulus/annulus.hpp"
#include "zero_annulus/genfib.hpp"
#include "zero_annulus/polynomial.hpp"
#include "zero_annulus/roots.hpp"

namespace zero_annulus {

/// Which algebraic route general_annulus takes. The two are equal in exact
/// arithmetic; `statement` pulls the k-dependent factor out as a prefactor,
/// `proof_intermediate` keeps it inside the k-th root.
enum class BoundForm { statement, proof_intermediate };

/// Per-index candidates behind an annulus.
///
/// `outer_terms[k-1]` is the bracketed quantity for index k raised to 1/k
/// (0 when a_{n-k} = 0); `inner_terms[k-1]` likewise for the inner bound
/// (+inf when a_k = 0, i.e. the index is skipped). The radii are rebuilt
/// exactly as `prefactor_outer * outer_terms[k_outer-1]` and
/// `prefactor_inner * inner_terms[k_inner-1]`.
struct BoundReport {
  Annulus annulus;
  std::vector<double> outer_terms;
  std::vector<double> inner_terms;
  unsigned k_outer = 1;
  unsigned k_inner = 1;
  double prefactor_outer = 1.0;
  double prefactor_inner = 1.0;
  /// ln r1 and ln r2, finite even when the radii themselves over- or
  /// underflow double (high degree with unfavourable parameters).
  double log_r1 = 0.0;
  double log_r2 = 0.0;
};

/// Unique nonnegative root of x^n - |a_{n-1}/a_n| x^{n-1} - ... - |a_0/a_n|.
///
/// `residual` is Q(radius) / max(1, radius^n), i.e. Q itself on [0, 1] and
/// the equivalent 1 - sum |a_j/a_n| radius^{j-n} beyond, so it stays
/// meaningful when radius^n is far outside double range.
struct CauchyResult {
  double radius = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

CauchyResult cauchy_radius(const Polynomial& poly);
Annulus cauchy_annulus(const Polynomial& poly);

BoundReport diaz_barrero_annulus(const Polynomial& poly);
BoundReport t_fib_annulus(const Polynomial& poly, double t);
BoundReport general_annulus(const Polynomial& poly, const FibParams& outer, const FibParams& inner,
                            BoundForm form = BoundForm::statement);

/// One side (outer or inner) of a general annulus.
struct BoundSide {
  double radius = 0.0;
  double log_radius = 0.0;
  double prefactor = 1.0;
  unsigned k_extremal = 1;
  std::vector<double> terms;
};

/// Caches everything in the bound formulas that depends only on the
/// polynomial (log coefficient moduli, log binomials), so the tuner can
/// re-evaluate radii for many parameter triples cheaply.
class AnnulusEvaluator {
 public:
  explicit AnnulusEvaluator(const Polynomial& poly);

  unsigned degree() const noexcept { return degree_; }
  bool has_zero_constant_term() const noexcept;

  BoundSide outer(const FibParams& params, BoundForm form = BoundForm::statement) const;
  BoundSide inner(const FibParams& params, BoundForm form = BoundForm::statement) const;

  double outer_radius(const FibParams& params) const { return outer(params).radius; }
  double inner_radius(const FibParams& params) const { return inner(params).radius; }

 private:
  // Log of the parameter-dependent factor D_k in
  //   outer bracket_k = F_{4n} / D_k * |a_{n-k}/a_n|
  // for the requested form; the prefactor is returned separately.
  struct LogFactors {
    std::vector<double> log_denominator;  // index k, entries 1..n
    double log_f4n = 0.0;
    double prefactor = 1.0;
  };
  LogFactors log_factors(const FibParams& params, BoundForm form) const;
  static BoundSide finish_side(std::vector<double> log_terms, unsigned best, double prefactor);

  unsigned degree_;
  std::vector<double> log_abs_coeff_;  // ln|a_j|, -inf for zeros
  std::vector<double> log_binomial_;   // ln C(n, k)
};

struct TightnessMetrics {
  double inner_ratio = 0.0;  // r1 / min|z|, 0 when r1 = 0
  double outer_ratio = 0.0;  // max|z| / r2
  double log_width = 0.0;    // ln(r2 / r1), +inf when r1 = 0
};

/// Throws std::invalid_argument for an empty root set.
TightnessMetrics annulus_width_metrics(const Annulus& annulus, const RootSet& roots);
inline TightnessMetrics annulus_width_metrics(const BoundReport& report, const RootSet& roots) {
  return annulus_width_metrics(report.annulus, roots);
}

}  // namespace zero_annulus
