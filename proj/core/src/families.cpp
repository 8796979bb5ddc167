#include "zero_annulus/families.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace zero_annulus {

namespace {

// std::uniform_real_distribution is implementation-defined; this keeps the
// streams identical across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

Complex random_phase(std::mt19937_64& rng, double modulus) {
  return std::polar(modulus, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

std::vector<Complex> uniform_coeffs(unsigned degree, std::mt19937_64& rng) {
  std::vector<Complex> coeffs(degree + 1);
  for (unsigned j = 0; j < degree; ++j) coeffs[j] = random_phase(rng, uniform(rng, 0.0, 10.0));
  coeffs[degree] = random_phase(rng, uniform(rng, 0.5, 10.0));
  return coeffs;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::uniform: return "uniform";
    case Family::unit_circle_roots: return "unit-circle-roots";
    case Family::small_a0: return "small-a0";
    case Family::clustered: return "clustered";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::uniform, Family::unit_circle_roots, Family::small_a0, Family::clustered}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Polynomial random_polynomial(Family family, unsigned degree, std::mt19937_64& rng) {
  switch (family) {
    case Family::uniform:
      return Polynomial(uniform_coeffs(degree, rng));
    case Family::small_a0: {
      auto coeffs = uniform_coeffs(degree, rng);
      coeffs[0] = random_phase(rng, uniform(rng, 0.1, 10.0) * std::pow(10.0, -uniform(rng, 6.0, 12.0)));
      return Polynomial(std::move(coeffs));
    }
    case Family::unit_circle_roots: {
      std::vector<Complex> roots(degree);
      for (auto& r : roots) r = random_phase(rng, 1.0);
      return from_roots(roots);
    }
    case Family::clustered: {
      std::vector<Complex> roots;
      roots.reserve(degree);
      while (roots.size() < degree) {
        const Complex center = random_phase(rng, uniform(rng, 0.2, 3.0));
        const unsigned size = 1 + static_cast<unsigned>(unit(rng) * 4.0);
        for (unsigned i = 0; i < size && roots.size() < degree; ++i) {
          roots.push_back(center + random_phase(rng, 1e-4 * uniform(rng, 0.0, 1.0)));
        }
      }
      return from_roots(roots);
    }
  }
  return Polynomial(uniform_coeffs(degree, rng));
}

FibParams random_params(std::mt19937_64& rng, double lo, double hi) {
  const double l = std::log(lo);
  const double h = std::log(hi);
  return {std::exp(uniform(rng, l, h)), std::exp(uniform(rng, l, h)), std::exp(uniform(rng, l, h))};
}

}  // namespace zero_annulus
