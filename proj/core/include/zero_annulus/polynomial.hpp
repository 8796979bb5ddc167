#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zero_annulus {

using Complex = std::complex<double>;

/// Raised when polynomial text cannot be turned into a Polynomial.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs a non-constant polynomial.
class InvalidPolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense complex polynomial, coefficients stored in ascending degree.
///
/// Trailing (high-degree) zeros are stripped on construction, so
/// `coeff(degree())` is always nonzero. The zero polynomial is not
/// representable.
class Polynomial {
 public:
  /// Throws InvalidPolynomial if every coefficient is zero.
  explicit Polynomial(std::vector<Complex> coeffs);
  static Polynomial from_real(std::span<const double> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& coeff(std::size_t j) const { return coeffs_.at(j); }
  const Complex& leading() const noexcept { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Parses `[[re, im], ...]` or a plain numeric array, ascending degree.
Polynomial parse_polynomial(std::string_view text);
Polynomial read_polynomial_file(const std::string& path);
std::string format_polynomial(const Polynomial& poly);

/// Horner evaluation.
Complex evaluate(const Polynomial& poly, Complex z) noexcept;

/// Value and first derivative in one Horner pass.
struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};
ValueAndDerivative evaluate_with_derivative(const Polynomial& poly, Complex z) noexcept;

/// z^n P(1/z): coefficient j becomes a_{n-j}. Drops degree when a_0 = 0.
Polynomial reverse(const Polynomial& poly);

/// Divides every coefficient by a_n, leaving the zeros unchanged.
Polynomial monic_normalize(const Polynomial& poly);

/// P(lambda z), i.e. a_j -> a_j lambda^j.
Polynomial scale_argument(const Polynomial& poly, double lambda);

/// Monic polynomial with the given zeros (with multiplicity).
Polynomial from_roots(std::span<const Complex> roots);

/// Throws InvalidPolynomial when poly is constant.
void require_nonconstant(const Polynomial& poly, std::string_view operation);

}  // namespace zero_annulus
