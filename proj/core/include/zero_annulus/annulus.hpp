#pragma once

#include <optional>
#include <string_view>

#include "zero_annulus/genfib.hpp"

namespace zero_annulus {

enum class BoundMethod { cauchy_disk, diaz_barrero, t_fib, general };

std::string_view to_string(BoundMethod method) noexcept;

/// Closed region r1 <= |z| <= r2 claimed to hold every zero.
struct Annulus {
  double r1 = 0.0;
  double r2 = 0.0;
  BoundMethod method = BoundMethod::general;
  std::optional<FibParams> outer_params;
  std::optional<FibParams> inner_params;
};

}  // namespace zero_annulus
