#pragma once

#include <cstdint>
#include <vector>

#include "zero_annulus/annulus.hpp"
#include "zero_annulus/genfib.hpp"
#include "zero_annulus/polynomial.hpp"

namespace zero_annulus {

/// Multi-start Nelder-Mead search over positive parameter triples.
struct TuneConfig {
  /// (1,1,1) first, then the 3x3x3 grid over {1/4, 1, 4} without repeating it.
  std::vector<FibParams> starts = default_starts();
  /// Total objective evaluations across all starts.
  int budget = 2000;
  double param_floor = 1e-3;
  double param_ceiling = 1e3;
  /// Drives the perturbed restarts that spend budget left over by starts
  /// that converge early.
  std::uint64_t seed = 0;

  static std::vector<FibParams> default_starts();
};

struct TracePoint {
  FibParams params;
  double radius;
};

struct TuneResult {
  FibParams best_params{1.0, 1.0, 1.0};
  double best_radius = 0.0;
  /// Radius at (1,1,1).
  double baseline_radius = 0.0;
  int evaluations = 0;
  /// Strict improvements of the running best, in evaluation order.
  std::vector<TracePoint> trace;
  /// Every evaluated point, in evaluation order.
  std::vector<TracePoint> visited;
  /// Set by maximize_inner_radius when a_0 = 0 (r1 is identically 0).
  bool degenerate = false;
};

/// Minimizes r2 over the outer triple (a, b, c). Deterministic given config.
/// Throws std::invalid_argument when budget < starts.size() or the config
/// is otherwise unusable.
TuneResult minimize_outer_radius(const Polynomial& poly, const TuneConfig& config = {});

/// Maximizes r1 over the inner triple (u, v, w).
TuneResult maximize_inner_radius(const Polynomial& poly, const TuneConfig& config = {});

struct TunedAnnulus {
  TuneResult outer;
  TuneResult inner;
  Annulus annulus;
};

TunedAnnulus tune_annulus(const Polynomial& poly, const TuneConfig& config = {});

}  // namespace zero_annulus
