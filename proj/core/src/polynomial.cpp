#include "zero_annulus/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zero_annulus {

namespace {

std::vector<Complex> strip_trailing_zeros(std::vector<Complex> coeffs) {
  while (!coeffs.empty() && coeffs.back() == Complex{}) coeffs.pop_back();
  return coeffs;
}

double numeric_entry(const nlohmann::json& value, std::size_t index) {
  if (!value.is_number()) {
    throw ParseError("coefficient " + std::to_string(index) + " is not numeric");
  }
  const double x = value.get<double>();
  if (!std::isfinite(x)) {
    throw ParseError("coefficient " + std::to_string(index) + " is not finite");
  }
  return x;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs)
    : coeffs_(strip_trailing_zeros(std::move(coeffs))) {
  if (coeffs_.empty()) {
    throw InvalidPolynomial("polynomial has no nonzero coefficient");
  }
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  return Polynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

Polynomial parse_polynomial(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed polynomial document: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("polynomial document must be an array");
  if (doc.empty()) throw ParseError("polynomial document is an empty array");

  std::vector<Complex> coeffs;
  coeffs.reserve(doc.size());
  for (std::size_t j = 0; j < doc.size(); ++j) {
    const auto& entry = doc[j];
    if (entry.is_array()) {
      if (entry.size() != 2) {
        throw ParseError("coefficient " + std::to_string(j) + " must be a [re, im] pair");
      }
      coeffs.emplace_back(numeric_entry(entry[0], j), numeric_entry(entry[1], j));
    } else {
      coeffs.emplace_back(numeric_entry(entry, j), 0.0);
    }
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == Complex{}; })) {
    throw ParseError("all coefficients are zero; degree undefined");
  }
  return Polynomial(std::move(coeffs));
}

Polynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polynomial file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polynomial(buffer.str());
}

std::string format_polynomial(const Polynomial& poly) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& c : poly.coeffs()) doc.push_back({c.real(), c.imag()});
  return doc.dump();
}

Complex evaluate(const Polynomial& poly, Complex z) noexcept {
  const auto a = poly.coeffs();
  Complex acc = a.back();
  for (std::size_t j = a.size() - 1; j-- > 0;) acc = acc * z + a[j];
  return acc;
}

ValueAndDerivative evaluate_with_derivative(const Polynomial& poly, Complex z) noexcept {
  const auto a = poly.coeffs();
  Complex p = a.back();
  Complex dp{};
  for (std::size_t j = a.size() - 1; j-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[j];
  }
  return {p, dp};
}

Polynomial reverse(const Polynomial& poly) {
  std::vector<Complex> coeffs(poly.coeffs().rbegin(), poly.coeffs().rend());
  return Polynomial(std::move(coeffs));
}

Polynomial monic_normalize(const Polynomial& poly) {
  const Complex lead = poly.leading();
  std::vector<Complex> coeffs(poly.coeffs().begin(), poly.coeffs().end());
  for (auto& c : coeffs) c /= lead;
  coeffs.back() = 1.0;
  return Polynomial(std::move(coeffs));
}

Polynomial scale_argument(const Polynomial& poly, double lambda) {
  std::vector<Complex> coeffs(poly.coeffs().begin(), poly.coeffs().end());
  double power = 1.0;
  for (auto& c : coeffs) {
    c *= power;
    power *= lambda;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial from_roots(std::span<const Complex> roots) {
  std::vector<Complex> coeffs{1.0};
  for (const Complex& r : roots) {
    coeffs.push_back(0.0);
    for (std::size_t j = coeffs.size() - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - r * coeffs[j];
    coeffs[0] = -r * coeffs[0];
  }
  return Polynomial(std::move(coeffs));
}

void require_nonconstant(const Polynomial& poly, std::string_view operation) {
  if (poly.degree() == 0) {
    throw InvalidPolynomial(std::string(operation) + " requires a non-constant polynomial");
  }
}

}  // namespace zero_annulus
