#include "zero_annulus/tuner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "zero_annulus/bounds.hpp"

namespace zero_annulus {

namespace {

using Point = std::array<double, 3>;

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
constexpr double kInitialStep = 0.5;
constexpr double kMinDiameter = 1e-8;

Point operator+(const Point& x, const Point& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Point operator-(const Point& x, const Point& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Point operator*(double s, const Point& x) { return {s * x[0], s * x[1], s * x[2]}; }

double distance(const Point& x, const Point& y) {
  const Point d = x - y;
  return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
}

// Runs the searches for one side (outer or inner) of the annulus. Works on
// log-parameters; the objective is always minimized, so the inner radius
// enters negated.
class SideSearch {
 public:
  SideSearch(const AnnulusEvaluator& evaluator, bool outer, const TuneConfig& config, TuneResult& result)
      : evaluator_(evaluator),
        outer_(outer),
        log_floor_(std::log(config.param_floor)),
        log_ceiling_(std::log(config.param_ceiling)),
        result_(result) {}

  bool exhausted(int budget) const { return result_.evaluations >= budget; }

  // Nelder-Mead from `start` until the simplex collapses or `budget` (a
  // cumulative evaluation count) is reached.
  void run(const Point& start, int budget) {
    struct Vertex {
      Point x;
      double f;
    };
    std::array<Vertex, 4> simplex;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (exhausted(budget)) return;
      Point x = start;
      if (i > 0) x[i - 1] += kInitialStep;
      x = clamp(x);
      simplex[i] = {x, evaluate(x)};
    }
    auto by_value = [](const Vertex& l, const Vertex& r) { return l.f < r.f; };

    while (!exhausted(budget)) {
      std::stable_sort(simplex.begin(), simplex.end(), by_value);
      double diameter = 0.0;
      for (std::size_t i = 1; i < simplex.size(); ++i) diameter = std::max(diameter, distance(simplex[i].x, simplex[0].x));
      if (diameter < kMinDiameter) return;

      const Point centroid = (1.0 / 3.0) * (simplex[0].x + simplex[1].x + simplex[2].x);
      Vertex& worst = simplex[3];

      const Point xr = clamp(centroid + kReflect * (centroid - worst.x));
      const double fr = evaluate(xr);
      if (fr < simplex[0].f) {
        if (exhausted(budget)) {
          worst = {xr, fr};
          return;
        }
        const Point xe = clamp(centroid + kExpand * (centroid - worst.x));
        const double fe = evaluate(xe);
        worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        continue;
      }
      if (fr < simplex[2].f) {
        worst = {xr, fr};
        continue;
      }
      if (exhausted(budget)) return;
      const bool outside = fr < worst.f;
      const Point xc = outside ? clamp(centroid + kContract * (xr - centroid))
                               : clamp(centroid + kContract * (worst.x - centroid));
      const double fc = evaluate(xc);
      if (outside ? fc <= fr : fc < worst.f) {
        worst = {xc, fc};
        continue;
      }
      for (std::size_t i = 1; i < simplex.size() && !exhausted(budget); ++i) {
        simplex[i].x = clamp(simplex[0].x + kShrink * (simplex[i].x - simplex[0].x));
        simplex[i].f = evaluate(simplex[i].x);
      }
    }
  }

  Point clamp(Point x) const {
    for (double& v : x) v = std::clamp(v, log_floor_, log_ceiling_);
    return x;
  }

  double evaluate(const Point& x) {
    const FibParams params{std::exp(x[0]), std::exp(x[1]), std::exp(x[2])};
    const double radius = outer_ ? evaluator_.outer_radius(params) : evaluator_.inner_radius(params);
    ++result_.evaluations;
    result_.visited.push_back({params, radius});
    const bool improved = result_.trace.empty() || (outer_ ? radius < result_.best_radius : radius > result_.best_radius);
    if (improved) {
      result_.best_radius = radius;
      result_.best_params = params;
      result_.trace.push_back({params, radius});
    }
    return outer_ ? radius : -radius;
  }

 private:
  const AnnulusEvaluator& evaluator_;
  bool outer_;
  double log_floor_;
  double log_ceiling_;
  TuneResult& result_;
};

std::vector<FibParams> effective_starts(const TuneConfig& config) {
  if (!(config.param_floor > 0.0 && config.param_floor <= 1.0 && config.param_ceiling >= 1.0 &&
        std::isfinite(config.param_ceiling))) {
    throw std::invalid_argument("tuner bounds must satisfy 0 < floor <= 1 <= ceiling < inf");
  }
  const FibParams ones{1.0, 1.0, 1.0};
  std::vector<FibParams> starts;
  starts.push_back(ones);
  for (const auto& s : config.starts) {
    require_positive(s);
    if (std::find(starts.begin(), starts.end(), s) == starts.end()) starts.push_back(s);
  }
  if (config.budget < static_cast<int>(starts.size())) {
    throw std::invalid_argument("tuner budget (" + std::to_string(config.budget) + ") is smaller than the " +
                                std::to_string(starts.size()) + " starts");
  }
  return starts;
}

TuneResult tune_side(const Polynomial& poly, const TuneConfig& config, bool outer) {
  require_nonconstant(poly, outer ? "minimize_outer_radius" : "maximize_inner_radius");
  const auto starts = effective_starts(config);
  const AnnulusEvaluator evaluator(poly);

  TuneResult result;
  if (!outer && evaluator.has_zero_constant_term()) {
    result.degenerate = true;
    return result;
  }

  SideSearch search(evaluator, outer, config, result);
  const int n_starts = static_cast<int>(starts.size());
  const int share = config.budget / n_starts;
  const int extra = config.budget % n_starts;
  int allotted = 0;
  for (int s = 0; s < n_starts; ++s) {
    allotted += share + (s < extra ? 1 : 0);
    const auto& p = starts[s];
    search.run(search.clamp({std::log(p.a), std::log(p.b), std::log(p.c)}), allotted);
    if (s == 0) result.baseline_radius = result.visited.front().radius;
  }

  // Budget left by starts that converged early goes to restarts around the best point.
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> jitter(0.0, 1.0);
  while (config.budget - result.evaluations >= 8) {
    const auto& b = result.best_params;
    Point start{std::log(b.a) + jitter(rng), std::log(b.b) + jitter(rng), std::log(b.c) + jitter(rng)};
    search.run(search.clamp(start), std::min(config.budget, result.evaluations + std::max(share, 8)));
  }
  return result;
}

}  // namespace

std::vector<FibParams> TuneConfig::default_starts() {
  const std::array<double, 3> grid{0.25, 1.0, 4.0};
  std::vector<FibParams> starts{{1.0, 1.0, 1.0}};
  for (double a : grid) {
    for (double b : grid) {
      for (double c : grid) {
        const FibParams p{a, b, c};
        if (p != starts.front()) starts.push_back(p);
      }
    }
  }
  return starts;
}

TuneResult minimize_outer_radius(const Polynomial& poly, const TuneConfig& config) {
  return tune_side(poly, config, true);
}

TuneResult maximize_inner_radius(const Polynomial& poly, const TuneConfig& config) {
  return tune_side(poly, config, false);
}

TunedAnnulus tune_annulus(const Polynomial& poly, const TuneConfig& config) {
  TunedAnnulus out{minimize_outer_radius(poly, config), maximize_inner_radius(poly, config), {}};
  out.annulus = {out.inner.best_radius, out.outer.best_radius, BoundMethod::general, out.outer.best_params,
                 out.inner.best_params};
  return out;
}

}  // namespace zero_annulus
