#pragma once

#include <vector>

#include "zero_annulus/annulus.hpp"
#include "zero_annulus/polynomial.hpp"

namespace zero_annulus {

/// All zeros of a polynomial as computed by the Aberth-Ehrlich oracle.
struct RootSet {
  std::vector<Complex> roots;
  /// |P(z)| / sum_j |a_j| |z|^j for each root.
  std::vector<double> residuals;
  /// Number of computed roots within 1e-6 (1 + |z|) of each root, itself included.
  std::vector<unsigned> multiplicity;
  bool converged = false;
  int iterations = 0;
};

/// Backward residual |P(z)| / sum_j |a_j| |z|^j, evaluated through the
/// reversed polynomial when |z| > 1.
double backward_residual(const Polynomial& poly, Complex z);

/// Simultaneous Aberth-Ehrlich iteration.
///
/// Starts from n points on the circle of radius 0.9 times the Cauchy radius,
/// angles 2 pi i / n + 0.4. A root stops moving once its update drops below
/// tol (1 + |z|) or its backward residual reaches rounding level. Exact zero
/// roots (leading a_j = 0) are split off before iterating. Returns with
/// converged = false when max_iter sweeps are not enough; the best iterates
/// are kept.
RootSet find_roots(const Polynomial& poly, double tol = 1e-14, int max_iter = 2000);

enum class BoundViolation { inner, outer };

struct Violation {
  Complex root;
  double modulus = 0.0;
  BoundViolation bound = BoundViolation::outer;
  double relative_excess = 0.0;
};

struct ContainmentReport {
  bool all_inside = true;
  std::vector<Violation> violations;
};

/// Checks r1 (1 - eps) <= |z| <= r2 (1 + eps) for every root. Throws
/// std::invalid_argument when the root set did not converge.
ContainmentReport verify_containment(const RootSet& roots, const Annulus& annulus, double eps);

}  // namespace zero_annulus
