#include "zero_annulus/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zero_annulus/bounds.hpp"

namespace zero_annulus {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct NewtonStep {
  Complex ratio;    // P(z) / P'(z)
  double residual;  // backward residual at z
};

NewtonStep newton_step(std::span<const Complex> a, Complex z) {
  const std::size_t n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = a[n];
    Complex dp{};
    const double az = std::abs(z);
    double scale = std::abs(a[n]);
    for (std::size_t j = n; j-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[j];
      scale = scale * az + std::abs(a[j]);
    }
    return {p / dp, std::abs(p) / scale};
  }
  // P(z) = z^n q(y), y = 1/z, q(y) = a_0 y^n + ... + a_n.
  const Complex y = 1.0 / z;
  const double ay = std::abs(y);
  Complex q = a[0];
  Complex dq{};
  double scale = std::abs(a[0]);
  for (std::size_t j = 1; j <= n; ++j) {
    dq = dq * y + q;
    q = q * y + a[j];
    scale = scale * ay + std::abs(a[j]);
  }
  const double nn = static_cast<double>(n);
  return {z * q / (nn * q - y * dq), std::abs(q) / scale};
}

}  // namespace

double backward_residual(const Polynomial& poly, Complex z) {
  if (poly.degree() == 0) return 1.0;
  return newton_step(poly.coeffs(), z).residual;
}

RootSet find_roots(const Polynomial& poly, double tol, int max_iter) {
  require_nonconstant(poly, "find_roots");
  if (!(tol >= 1e-14)) throw std::invalid_argument("find_roots requires tol >= 1e-14");
  if (max_iter <= 0) throw std::invalid_argument("find_roots requires max_iter > 0");

  RootSet out;
  const auto all = poly.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  out.roots.assign(zeros, Complex{});

  const std::span<const Complex> a = all.subspan(zeros);
  const std::size_t n = a.size() - 1;
  bool all_frozen = true;

  if (n == 1) {
    out.roots.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    const Polynomial reduced(std::vector<Complex>(a.begin(), a.end()));
    const double radius = 0.9 * cauchy_radius(reduced).radius;
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
      z[i] = std::polar(radius, angle);
    }

    const double freeze_residual = 4.0 * static_cast<double>(n + 1) * kEps;
    std::vector<bool> frozen(n, false);
    std::size_t active = n;
    int sweep = 0;
    while (active > 0 && sweep < max_iter) {
      ++sweep;
      for (std::size_t i = 0; i < n; ++i) {
        if (frozen[i]) continue;
        const auto [ratio, residual] = newton_step(a, z[i]);
        if (residual <= freeze_residual) {
          frozen[i] = true;
          --active;
          continue;
        }
        Complex repulsion{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        }
        const Complex update = ratio / (1.0 - ratio * repulsion);
        if (!std::isfinite(update.real()) || !std::isfinite(update.imag())) {
          // Stationary point of P: nudge off it deterministically.
          z[i] += std::polar(1e-8 * (1.0 + std::abs(z[i])), 0.4 + static_cast<double>(i));
          continue;
        }
        z[i] -= update;
        if (std::abs(update) <= tol * (1.0 + std::abs(z[i]))) {
          frozen[i] = true;
          --active;
        }
      }
    }
    out.iterations = sweep;
    all_frozen = active == 0;

    // Newton polish, accepted only while the residual keeps dropping.
    for (auto& root : z) {
      for (int step = 0; step < 3; ++step) {
        const auto [ratio, residual] = newton_step(a, root);
        if (residual == 0.0 || !std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) break;
        const Complex candidate = root - ratio;
        if (newton_step(a, candidate).residual >= residual) break;
        root = candidate;
      }
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  out.residuals.reserve(out.roots.size());
  out.converged = all_frozen;
  for (const Complex& root : out.roots) {
    const double r = root == Complex{} && zeros > 0 ? 0.0 : backward_residual(poly, root);
    out.residuals.push_back(r);
    if (!(r <= 1e-10)) out.converged = false;
  }

  out.multiplicity.assign(out.roots.size(), 0);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const double radius = 1e-6 * (1.0 + std::abs(out.roots[i]));
    for (const Complex& other : out.roots) {
      if (std::abs(out.roots[i] - other) < radius) ++out.multiplicity[i];
    }
  }
  return out;
}

ContainmentReport verify_containment(const RootSet& roots, const Annulus& annulus, double eps) {
  if (!roots.converged) throw std::invalid_argument("verify_containment needs a converged root set");
  ContainmentReport report;
  for (const Complex& z : roots.roots) {
    const double modulus = std::abs(z);
    if (modulus < annulus.r1 * (1.0 - eps)) {
      report.violations.push_back({z, modulus, BoundViolation::inner, (annulus.r1 - modulus) / annulus.r1});
    } else if (modulus > annulus.r2 * (1.0 + eps)) {
      const double excess = annulus.r2 > 0.0 ? (modulus - annulus.r2) / annulus.r2
                                             : std::numeric_limits<double>::infinity();
      report.violations.push_back({z, modulus, BoundViolation::outer, excess});
    }
  }
  report.all_inside = report.violations.empty();
  return report;
}

}  // namespace zero_annulus
