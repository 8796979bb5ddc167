#include <cmath>
#include <random>

#include <doctest.h>

#include "zero_annulus/bounds.hpp"
#include "zero_annulus/families.hpp"
#include "zero_annulus/tuner.hpp"

using namespace zero_annulus;

namespace {

const Polynomial kExample = Polynomial::from_real(std::vector<double>{0.7, 0.3, 0.1, 1.0});

void check_trace_monotone(const TuneResult& r, bool decreasing) {
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    if (decreasing) {
      CHECK(r.trace[i].radius < r.trace[i - 1].radius);
    } else {
      CHECK(r.trace[i].radius > r.trace[i - 1].radius);
    }
  }
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.back().radius == r.best_radius);
  CHECK(r.trace.back().params == r.best_params);
}

}  // namespace

TEST_SUITE("tuner") {

TEST_CASE("default configuration") {
  const TuneConfig config;
  CHECK(config.starts.size() == 27);
  CHECK(config.starts.front() == FibParams{1, 1, 1});
  CHECK(config.budget == 2000);
  CHECK(config.param_floor == 1e-3);
  CHECK(config.param_ceiling == 1e3);
}

TEST_CASE("outer radius on the worked example") {
  const auto r = minimize_outer_radius(kExample);
  CHECK(r.baseline_radius == diaz_barrero_annulus(kExample).annulus.r2);
  CHECK(r.best_radius <= 1.1841);
  CHECK(r.best_radius <= r.baseline_radius);
  CHECK(r.evaluations <= 2000);
  CHECK(r.visited.size() == static_cast<std::size_t>(r.evaluations));
  CHECK(general_annulus(kExample, r.best_params, {1, 1, 1}).annulus.r2 == r.best_radius);
  check_trace_monotone(r, true);
}

TEST_CASE("inner radius on the worked example") {
  const auto r = maximize_inner_radius(kExample);
  const double min_root = 0.8057;  // real zero in (-0.85, -0.8)
  CHECK(r.best_radius >= diaz_barrero_annulus(kExample).annulus.r1);
  CHECK(r.best_radius <= min_root);
  CHECK_FALSE(r.degenerate);
  check_trace_monotone(r, false);
}

TEST_CASE("degenerate inner search when a_0 = 0") {
  const auto r = maximize_inner_radius(Polynomial::from_real(std::vector<double>{0, 0, 1}));
  CHECK(r.degenerate);
  CHECK(r.best_radius == 0.0);
  CHECK(r.evaluations == 0);
}

TEST_CASE("linear polynomial is parameter independent") {
  const auto p = Polynomial::from_real(std::vector<double>{5, 1});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto rep = general_annulus(p, random_params(rng, 1e-3, 1e3), random_params(rng, 1e-3, 1e3));
    CHECK(rep.annulus.r1 == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(rep.annulus.r2 == doctest::Approx(5.0).epsilon(1e-12));
  }
  const auto t = tune_annulus(p);
  CHECK(t.annulus.r1 == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(t.annulus.r2 == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("tune_annulus tightens and stays sound") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_polynomial(Family::uniform, 10, rng);
    const auto roots = find_roots(p);
    REQUIRE(roots.converged);
    TuneConfig config;
    config.budget = 600;
    const auto t = tune_annulus(p, config);
    const auto base = diaz_barrero_annulus(p).annulus;
    CHECK(t.annulus.r2 <= base.r2);
    CHECK(t.annulus.r1 >= base.r1);
    CHECK(t.annulus.r2 - t.annulus.r1 <= base.r2 - base.r1);
    CHECK(verify_containment(roots, t.annulus, 1e-8).all_inside);
    // Every visited point is itself a valid bound.
    const auto& outer_visits = t.outer.visited;
    const auto& inner_visits = t.inner.visited;
    for (std::size_t i = 0; i < outer_visits.size(); i += outer_visits.size() / 50 + 1) {
      CHECK(verify_containment(roots, Annulus{0.0, outer_visits[i].radius}, 1e-8).all_inside);
    }
    for (std::size_t i = 0; i < inner_visits.size(); i += inner_visits.size() / 50 + 1) {
      CHECK(verify_containment(roots, Annulus{inner_visits[i].radius, INFINITY}, 1e-8).all_inside);
    }
  }
  const auto unit = tune_annulus(Polynomial::from_real(std::vector<double>{-1, 0, 1}));
  CHECK(unit.annulus.r1 <= 1.0 * (1 + 1e-12));
  CHECK(unit.annulus.r2 >= 1.0 * (1 - 1e-12));
}

TEST_CASE("deterministic for a fixed config") {
  TuneConfig config;
  config.seed = 1234;
  config.budget = 500;
  const auto a = tune_annulus(kExample, config);
  const auto b = tune_annulus(kExample, config);
  CHECK(a.outer.best_radius == b.outer.best_radius);
  CHECK(a.outer.best_params == b.outer.best_params);
  CHECK(a.inner.best_radius == b.inner.best_radius);
  CHECK(a.outer.evaluations == b.outer.evaluations);
  CHECK(a.outer.trace.size() == b.outer.trace.size());
}

TEST_CASE("parameters are clamped to the configured box") {
  TuneConfig config;
  config.param_floor = 0.5;
  config.param_ceiling = 2.0;
  const auto r = minimize_outer_radius(kExample, config);
  for (const auto& v : r.visited) {
    for (double x : {v.params.a, v.params.b, v.params.c}) {
      CHECK(x >= 0.5 * (1 - 1e-12));
      CHECK(x <= 2.0 * (1 + 1e-12));
    }
  }
}

TEST_CASE("config errors") {
  TuneConfig small;
  small.budget = 5;
  CHECK_THROWS_AS(minimize_outer_radius(kExample, small), std::invalid_argument);
  TuneConfig bad_box;
  bad_box.param_floor = 0.0;
  CHECK_THROWS_AS(maximize_inner_radius(kExample, bad_box), std::invalid_argument);
  TuneConfig bad_start;
  bad_start.starts.push_back({1, -1, 1});
  CHECK_THROWS_AS(minimize_outer_radius(kExample, bad_start), InvalidParameter);
  CHECK_THROWS_AS(tune_annulus(Polynomial::from_real(std::vector<double>{3})), InvalidPolynomial);
}

TEST_CASE("(1,1,1) is always searched first") {
  TuneConfig config;
  config.starts = {{4, 4, 4}};
  config.budget = 50;
  const auto r = minimize_outer_radius(kExample, config);
  CHECK(r.visited.front().params == FibParams{1, 1, 1});
  CHECK(r.baseline_radius == diaz_barrero_annulus(kExample).annulus.r2);
}

}
