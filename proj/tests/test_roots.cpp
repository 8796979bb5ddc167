#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "zero_annulus/bounds.hpp"
#include "zero_annulus/families.hpp"
#include "zero_annulus/roots.hpp"

using namespace zero_annulus;

namespace {

Polynomial real_poly(std::vector<double> c) { return Polynomial::from_real(c); }

std::vector<double> sorted_moduli(const RootSet& rs) {
  std::vector<double> m;
  for (const auto& z : rs.roots) m.push_back(std::abs(z));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_SUITE("roots_oracle") {

TEST_CASE("z^2 - 1") {
  const auto rs = find_roots(real_poly({-1, 0, 1}));
  REQUIRE(rs.converged);
  REQUIRE(rs.roots.size() == 2);
  std::vector<double> re{rs.roots[0].real(), rs.roots[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-14));
  for (double r : rs.residuals) CHECK(r <= 1e-14);
}

TEST_CASE("cube roots of unity") {
  const auto rs = find_roots(real_poly({-1, 0, 0, 1}));
  REQUIRE(rs.converged);
  for (const auto& z : rs.roots) {
    CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(z * z * z - 1.0) <= 1e-14);
  }
}

TEST_CASE("worked example polynomial") {
  const auto p = real_poly({0.7, 0.3, 0.1, 1.0});
  const auto rs = find_roots(p);
  REQUIRE(rs.converged);
  const auto real_root = *std::find_if(rs.roots.begin(), rs.roots.end(),
                                       [](Complex z) { return std::abs(z.imag()) < 1e-12; });
  CHECK(real_root.real() > -0.85);
  CHECK(real_root.real() < -0.8);
  const auto m = sorted_moduli(rs);
  CHECK(m[0] == doctest::Approx(0.806).epsilon(1e-3));
  // Conjugate pair: |z|^2 * 0.806 = 0.7.
  CHECK(m[1] == doctest::Approx(m[2]).epsilon(1e-12));
  CHECK(m[0] * m[1] * m[2] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("zero roots are split off exactly") {
  const auto rs = find_roots(real_poly({0, 0, -4, 0, 1}));
  REQUIRE(rs.converged);
  const auto m = sorted_moduli(rs);
  CHECK(m[0] == 0.0);
  CHECK(m[1] == 0.0);
  CHECK(m[2] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(m[3] == doctest::Approx(2.0).epsilon(1e-14));

  const auto mono = find_roots(real_poly({0, 0, 0, 5}));
  CHECK(mono.converged);
  CHECK(mono.roots == std::vector<Complex>(3, Complex{}));
  CHECK(mono.multiplicity == std::vector<unsigned>(3, 3u));
}

TEST_CASE("multiple roots are reported as clusters") {
  const std::vector<Complex> zs{2.0, 2.0, Complex(0, 1)};
  const auto rs = find_roots(from_roots(zs));
  REQUIRE(rs.converged);
  const auto near_two = std::count_if(rs.roots.begin(), rs.roots.end(), [](Complex z) { return std::abs(z - 2.0) < 1e-6; });
  CHECK(near_two == 2);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    CHECK(rs.multiplicity[i] == (std::abs(rs.roots[i] - 2.0) < 1e-6 ? 2u : 1u));
  }
}

TEST_CASE("errors and non-convergence") {
  CHECK_THROWS_AS(find_roots(real_poly({1})), InvalidPolynomial);
  CHECK_THROWS_AS(find_roots(real_poly({1, 1}), 1e-16), std::invalid_argument);
  std::mt19937_64 rng(3);
  const auto p = random_polynomial(Family::uniform, 40, rng);
  const auto rs = find_roots(p, 1e-14, 1);
  CHECK_FALSE(rs.converged);
  CHECK(rs.roots.size() == 40);
  CHECK_THROWS_AS(verify_containment(rs, Annulus{0.0, 1e9}, 1e-8), std::invalid_argument);
}

TEST_CASE("verify_containment") {
  const auto rs = find_roots(real_poly({-1, 0, 1}));
  const auto inside = verify_containment(rs, Annulus{0.5, 2.0}, 1e-8);
  CHECK(inside.all_inside);
  CHECK(inside.violations.empty());

  const auto outside = verify_containment(rs, Annulus{1.5, 2.0}, 1e-8);
  CHECK_FALSE(outside.all_inside);
  REQUIRE(outside.violations.size() == 2);
  for (const auto& v : outside.violations) {
    CHECK(v.bound == BoundViolation::inner);
    CHECK(v.relative_excess == doctest::Approx(0.5 / 1.5).epsilon(1e-12));
  }
  const auto too_small = verify_containment(rs, Annulus{0.0, 0.5}, 1e-8);
  CHECK(too_small.violations.front().bound == BoundViolation::outer);
  CHECK(too_small.violations.front().relative_excess == doctest::Approx(1.0).epsilon(1e-12));

  const auto p = real_poly({0.7, 0.3, 0.1, 1.0});
  CHECK(verify_containment(find_roots(p), diaz_barrero_annulus(p).annulus, 1e-8).all_inside);
}

TEST_CASE("property: coefficients, product and reversal") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_polynomial(trial % 2 ? Family::uniform : Family::small_a0,
                                     1 + static_cast<unsigned>(rng() % 25), rng);
    const auto rs = find_roots(p);
    REQUIRE(rs.converged);
    CHECK(rs.roots.size() == p.degree());
    for (double r : rs.residuals) CHECK(r <= 1e-10);

    // Rebuild the monic polynomial from its zeros.
    const auto rebuilt = from_roots(rs.roots);
    const auto monic = monic_normalize(p);
    double scale = 0.0;
    for (const auto& c : monic.coeffs()) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j <= p.degree(); ++j) {
      CHECK(std::abs(rebuilt.coeff(j) - monic.coeff(j)) <= 1e-6 * scale);
    }

    Complex product = 1.0;
    for (const auto& z : rs.roots) product *= z;
    const double expected = std::abs(p.coeff(0) / p.leading());
    CHECK(std::abs(std::abs(product) - expected) <= 1e-8 * expected);

    const auto rev = find_roots(reverse(p));
    REQUIRE(rev.converged);
    auto forward = sorted_moduli(rs);
    auto backward = sorted_moduli(rev);
    std::transform(backward.begin(), backward.end(), backward.begin(), [](double m) { return 1.0 / m; });
    std::sort(backward.begin(), backward.end());
    for (std::size_t i = 0; i < forward.size(); ++i) {
      CHECK(std::abs(forward[i] - backward[i]) <= 1e-8 * forward[i]);
    }
  }
}

TEST_CASE("deterministic") {
  std::mt19937_64 rng(89);
  const auto p = random_polynomial(Family::uniform, 30, rng);
  const auto a = find_roots(p);
  const auto b = find_roots(p);
  CHECK(a.roots == b.roots);
  CHECK(a.iterations == b.iterations);
}

}
