#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "zero_annulus/genfib.hpp"
#include "zero_annulus/polynomial.hpp"

namespace zero_annulus {

/// Reproducible random polynomial families used by the benchmark harness
/// and the property suites.
enum class Family {
  uniform,            // complex coefficients, moduli uniform in [0, 10], a_n bounded away from 0
  unit_circle_roots,  // monic, zeros at random angles on |z| = 1
  small_a0,           // uniform, with a_0 shrunk by 10^-U(6, 12)
  clustered,          // monic, zeros in tight groups around a few centers
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

Polynomial random_polynomial(Family family, unsigned degree, std::mt19937_64& rng);

/// Log-uniform triple in [lo, hi]^3.
FibParams random_params(std::mt19937_64& rng, double lo = 0.1, double hi = 10.0);

}  // namespace zero_annulus
