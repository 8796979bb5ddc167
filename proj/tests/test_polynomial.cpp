#include <random>

#include <doctest.h>

#include "zero_annulus/polynomial.hpp"
#include "zero_annulus/roots.hpp"

using namespace zero_annulus;

namespace {

const Polynomial kExample = Polynomial::from_real(std::vector<double>{0.7, 0.3, 0.1, 1.0});

}  // namespace

TEST_SUITE("poly_core") {

TEST_CASE("parse pairs in ascending degree") {
  const auto p = parse_polynomial("[[0.7,0],[0.3,0],[0.1,0],[1,0]]");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(0) == Complex(0.7, 0));
  CHECK(p.coeff(1) == Complex(0.3, 0));
  CHECK(p.coeff(2) == Complex(0.1, 0));
  CHECK(p.coeff(3) == Complex(1, 0));
  CHECK(p == kExample);
}

TEST_CASE("parse accepts a constant and real shorthand") {
  CHECK(parse_polynomial("[[1,0]]").degree() == 0);
  const auto p = parse_polynomial("[2, 0, -1.5]");
  CHECK(p.degree() == 2);
  CHECK(p.coeff(2) == Complex(-1.5, 0));
  CHECK(parse_polynomial("[[1, 2], 3]").coeff(0) == Complex(1, 2));
}

TEST_CASE("parse strips trailing zeros") {
  const auto p = parse_polynomial("[[0,0],[1,0],[0,0]]");
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == Complex(0, 0));
  CHECK(p.coeff(1) == Complex(1, 0));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("[]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[[0,0],[0,0]]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[[1,\"x\"]]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[\"1\"]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("{\"a\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[[1,0],"), ParseError);
  CHECK_THROWS_AS(read_polynomial_file("/nonexistent/poly.json"), ParseError);
}

TEST_CASE("format round-trips through the parser") {
  const Polynomial p({Complex(0.1, -2.5), Complex(1e-300, 0), Complex(3, 1.0 / 3.0)});
  CHECK(parse_polynomial(format_polynomial(p)) == p);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(kExample, 0.0) == Complex(0.7, 0));
  CHECK(evaluate(kExample, 1.0).real() == doctest::Approx(2.1).epsilon(1e-15));
  CHECK(evaluate(kExample, -0.8).real() == doctest::Approx(0.012).epsilon(1e-12));
  const auto [v, d] = evaluate_with_derivative(kExample, Complex(0.5, 0.25));
  CHECK(std::abs(v - evaluate(kExample, Complex(0.5, 0.25))) < 1e-15);
  // P'(z) = 3z^2 + 0.2z + 0.3
  const Complex z(0.5, 0.25);
  CHECK(std::abs(d - (3.0 * z * z + 0.2 * z + 0.3)) < 1e-15);
}

TEST_CASE("reverse") {
  CHECK(reverse(kExample) == Polynomial::from_real(std::vector<double>{1.0, 0.1, 0.3, 0.7}));
  const auto pal = Polynomial::from_real(std::vector<double>{1, 2, 1});
  CHECK(reverse(pal) == pal);
  const auto r = reverse(Polynomial::from_real(std::vector<double>{0, 1}));
  CHECK(r.degree() == 0);
  CHECK(r.coeff(0) == Complex(1, 0));
}

TEST_CASE("monic_normalize") {
  CHECK(monic_normalize(Polynomial::from_real(std::vector<double>{1, 0, 2})) ==
        Polynomial::from_real(std::vector<double>{0.5, 0, 1}));
  CHECK(monic_normalize(kExample) == kExample);
  const Polynomial c({Complex(1, 1), Complex(0, 2)});
  CHECK(monic_normalize(c).leading() == Complex(1, 0));
}

TEST_CASE("scale_argument and from_roots") {
  const auto s = scale_argument(kExample, 2.0);
  CHECK(s.coeff(3) == Complex(8, 0));
  CHECK(s.coeff(1) == Complex(0.6, 0));
  const std::vector<Complex> roots{1.0, -1.0};
  CHECK(from_roots(roots) == Polynomial::from_real(std::vector<double>{-1, 0, 1}));
}

TEST_CASE("property: double reversal and the reversal identity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 20);
    std::vector<Complex> coeffs(n + 1);
    for (auto& c : coeffs) c = Complex(u(rng), u(rng));
    const Polynomial p(coeffs);
    CHECK(reverse(reverse(p)) == p);

    const Complex z(u(rng) / 5.0, u(rng) / 5.0);
    if (std::abs(z) < 1e-3) continue;
    const Complex lhs = evaluate(reverse(p), z);
    const Complex rhs = std::pow(z, static_cast<int>(n)) * evaluate(p, 1.0 / z);
    // Both sides are evaluated in floating point; compare against the
    // magnitude of the terms rather than the (possibly cancelling) value.
    double scale = 0.0;
    for (unsigned j = 0; j <= n; ++j) scale += std::abs(p.coeff(n - j)) * std::pow(std::abs(z), j);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("property: monic_normalize keeps the zeros") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    std::vector<Complex> coeffs(n + 1);
    for (auto& c : coeffs) c = Complex(u(rng), u(rng));
    const Polynomial p(coeffs);
    const auto m = monic_normalize(p);
    const auto roots = find_roots(p);
    REQUIRE(roots.converged);
    double max_coeff = 0.0;
    for (const auto& c : m.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    for (const Complex& z : roots.roots) CHECK(std::abs(evaluate(m, z)) <= 1e-8 * n * max_coeff);
  }
}

}
