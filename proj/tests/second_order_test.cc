#include <cmath>
#include <random>

#include "doctest.h"
#include "l1landscape/errors.h"
#include "l1landscape/first_order.h"
#include "l1landscape/objective.h"
#include "l1landscape/second_order.h"
#include "l1landscape/stationarity.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace l1landscape;
namespace ts = testing_support;

TEST_SUITE("secondorder") {

TEST_CASE("second subderivative examples") {
  const ExtendedReal a = second_subderivative(Vector{-1, 1}, Vector{1, 1}, Vector{2, 0});
  REQUIRE(a.is_finite());
  CHECK(a.value() == doctest::Approx(-4.0).epsilon(1e-12));

  const ExtendedReal b = second_subderivative(Vector{0, 0}, Vector{1, 0}, Vector{0, 1});
  REQUIRE(b.is_finite());
  CHECK(std::abs(b.value() - 1.0) <= 1e-10);

  const ExtendedReal c = second_subderivative(Vector{-1, 1}, Vector{1, 1}, Vector{-1, 0});
  CHECK(c.is_plus_infinity());
  CHECK_THROWS_AS(c.value(), std::logic_error);

  CHECK_THROWS_AS(second_subderivative(Vector{0.5, 0.2}, Vector{1, 1}, Vector{1, 0}),
                  NotStationaryError);
}

TEST_CASE("escape curvature examples") {
  const EscapeCurvature a = escape_curvature(Vector{-1, 1}, Vector{1, 1});
  CHECK(a.direction == Vector{2, 0});
  CHECK(a.value == doctest::Approx(-4.0));
  const EscapeCurvature b = escape_curvature(Vector{0, 0}, Vector{1, 1});
  CHECK(b.direction == Vector{1, 1});
  CHECK(b.value == doctest::Approx(-4.0));
  const EscapeCurvature c = escape_curvature(Vector{0.5, -0.5}, Vector{1, 1});
  CHECK(c.direction == Vector{0.5, 1.5});
  CHECK(c.value == doctest::Approx(-4.0));
  CHECK_THROWS_AS(escape_curvature(Vector{1, 1}, Vector{1, 1}), GroundTruthError);
  CHECK_THROWS_AS(escape_curvature(Vector{1, 0}, Vector{1, 1}), NotStationaryError);
}

TEST_CASE("face LP value matches vertex enumeration") {
  std::mt19937_64 rng(51);
  int finite = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 2 + k % 2;
    const Vector us = ts::small_integers(rng, n, -2, 2);
    if (is_zero_vector(us)) continue;
    Vector u = k % 2 ? ts::small_integers(rng, n, -2, 2) : ts::spurious_point(rng, us);
    if (!is_stationary_closed_form(u, us).is_stationary) continue;
    Vector w = ts::small_integers(rng, n, -2, 2);
    if (k % 3 == 0) w = sub(us, u);
    const ExtendedReal got = second_subderivative(u, us, w);
    if (oracle::directional_derivative(u, us, w) > 1e-9) {
      CHECK(got.is_plus_infinity());
      continue;
    }
    ++finite;
    const oracle::LpOutcome ref = oracle::second_order_lp(u, us, w);
    REQUIRE(ref.feasible);
    REQUIRE(got.is_finite());
    CHECK(std::abs(got.value() - ref.value) <= 1e-8);
  }
  CHECK(finite > 50);
}

TEST_CASE("spurious curvature law") {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 5;
    const Vector us = ts::ground_truth(rng, n, 0.15);
    const Vector u = ts::spurious_point(rng, us);
    const double expected = -norm1(us) * norm1(us);
    for (double s : {1.0, -1.0}) {
      const ExtendedReal v = second_subderivative(u, us, sub(scale(s, us), u));
      REQUIRE(v.is_finite());
      CHECK(std::abs(v.value() - expected) <= 1e-8);
    }
  }
}

TEST_CASE("positive homogeneity of degree two") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 4;
    const Vector us = ts::ground_truth(rng, n, 0.2);
    const Vector u = ts::spurious_point(rng, us);
    const Vector w = sub(us, u);
    const double lambda = 0.3 + 0.7 * (k % 5);
    const ExtendedReal a = second_subderivative(u, us, w);
    const ExtendedReal b = second_subderivative(u, us, scale(lambda, w));
    REQUIRE(a.is_finite());
    REQUIRE(b.is_finite());
    CHECK(std::abs(b.value() - lambda * lambda * a.value()) <=
          1e-8 * std::max(1.0, std::abs(b.value())));
  }
}

TEST_CASE("numeric estimator") {
  NumericGrid g;
  g.levels = 10;
  g.ball_samples = 50;
  const double a = second_subderivative_numeric(Vector{-1, 1}, Vector{1, 1}, Vector{2, 0}, g);
  CHECK(a >= -4.2);
  CHECK(a <= -3.8);
  const double b = second_subderivative_numeric(Vector{0, 0}, Vector{1, 0}, Vector{0, 1}, g);
  CHECK(b >= 0.95);
  CHECK(b <= 1.05);
  CHECK(second_subderivative_numeric(Vector{1, 1}, Vector{1, 1}, Vector{0, 0}) == 0.0);
  CHECK(second_subderivative_numeric(Vector{-1, 1}, Vector{1, 1}, Vector{2, 0}, g) == a);
}

TEST_CASE("numeric estimator stays near the exact value and is monotone in the grid") {
  struct Case {
    Vector u, us, w;
    double exact;
  };
  const Case cases[] = {{{-1, 1}, {1, 1}, {2, 0}, -4.0}, {{0, 0}, {1, 0}, {0, 1}, 1.0}};
  for (const Case& c : cases) {
    NumericGrid coarse;
    coarse.levels = 4;
    coarse.ball_samples = 8;
    NumericGrid fine;
    fine.levels = 14;
    fine.ball_samples = 128;
    const double vc = second_subderivative_numeric(c.u, c.us, c.w, coarse);
    const double vf = second_subderivative_numeric(c.u, c.us, c.w, fine);
    const double tol = 0.05 * std::abs(c.exact);
    CHECK(vc >= c.exact - tol);
    CHECK(vf >= c.exact - tol);
    // The fine grid contains the coarse one, so the minimum can only move down.
    CHECK(vf <= vc);
    CHECK(std::abs(vf - c.exact) <= tol);
  }
}

TEST_CASE("numeric estimator agrees on escape directions") {
  std::mt19937_64 rng(54);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 4;
    const Vector us = ts::ground_truth(rng, n);
    const Vector u = ts::spurious_point(rng, us);
    const Vector w = sub(us, u);
    const double exact = -norm1(us) * norm1(us);
    const double est = second_subderivative_numeric(u, us, w);
    CHECK(std::abs(est - exact) <= 0.05 * std::abs(exact));
  }
}

TEST_CASE("classification examples") {
  CHECK(classify_point(Vector{1, 1}, Vector{1, 1}).kind == PointKind::kGlobalMin);

  const PointClassification s = classify_point(Vector{-1, 1}, Vector{1, 1});
  CHECK(s.kind == PointKind::kSpuriousStationary);
  REQUIRE(s.escape_direction);
  CHECK(*s.escape_direction == Vector{2, 0});
  REQUIRE(s.curvature);
  CHECK(*s.curvature == doctest::Approx(-4.0));

  const PointClassification n = classify_point(Vector{0.5, 0.2}, Vector{1, 1});
  CHECK(n.kind == PointKind::kNotStationary);
  REQUIRE(n.descent_direction);
  REQUIRE(n.descent_slope);
  CHECK(*n.descent_slope < 0.0);
  CHECK(directional_derivative(Vector{0.5, 0.2}, Vector{1, 1}, *n.descent_direction) < 0.0);
}

TEST_CASE("classifier soundness") {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 400; ++k) {
    const std::size_t n = 2 + k % 4;
    const Vector us = k % 5 == 0 ? ts::small_integers(rng, n, -2, 2) : ts::ground_truth(rng, n, 0.2);
    Vector u;
    switch (k % 4) {
      case 0: u = ts::gaussian(rng, n); break;
      case 1: u = is_zero_vector(us) ? us : ts::spurious_point(rng, us); break;
      case 2: u = us; break;
      default: u = ts::small_integers(rng, n, -2, 2); break;
    }
    const PointClassification c = classify_point(u, us);
    if (c.kind == PointKind::kGlobalMin) CHECK(objective(u, us) <= 1e-9);
    const bool cf = is_stationary_closed_form(u, us).is_stationary;
    const bool lp = is_stationary_lp(u, us).is_stationary;
    if (cf && lp) CHECK(c.kind != PointKind::kNotStationary);
    if (c.kind == PointKind::kNotStationary) {
      REQUIRE(c.descent_direction);
      CHECK(directional_derivative(u, us, *c.descent_direction) < 0.0);
    }
  }
}

TEST_CASE("steepest descent direction") {
  std::mt19937_64 rng(56);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 4;
    const Vector us = ts::ground_truth(rng, n);
    const Vector u = ts::gaussian(rng, n);
    if (is_stationary_closed_form(u, us).is_stationary) continue;
    const SteepestDescent d = steepest_descent_direction(u, us);
    CHECK(norm_inf(d.direction) <= 1.0 + 1e-9);
    CHECK(d.slope < 0.0);
    CHECK(std::abs(directional_derivative(u, us, d.direction) - d.slope) <= 1e-8);
    // No other point of the unit box does better.
    for (int q = 0; q < 20; ++q) {
      const Vector v = ts::uniform(rng, n, -1.0, 1.0);
      CHECK(directional_derivative(u, us, v) >= d.slope - 1e-8);
    }
  }
}

}  // TEST_SUITE
