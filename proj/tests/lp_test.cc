#include <cmath>
#include <random>

#include "doctest.h"
#include "l1landscape/lp.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace l1landscape;
using lp::BoxEqLP;
using lp::Status;
namespace ts = testing_support;

namespace {

BoxEqLP make(Vector lo, Vector hi, std::size_t m, std::vector<double> a, Vector b, Vector c) {
  BoxEqLP p;
  p.lower = std::move(lo);
  p.upper = std::move(hi);
  p.eq_matrix = Matrix(m, p.lower.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < p.lower.size(); ++j) p.eq_matrix(i, j) = a[i * p.lower.size() + j];
  p.eq_rhs = std::move(b);
  p.objective = std::move(c);
  return p;
}

oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat r(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Random LP whose feasible set is nonempty by construction (b = A x0).
BoxEqLP random_lp(std::mt19937_64& rng, std::size_t k, std::size_t m, bool integer) {
  BoxEqLP p;
  p.lower.resize(k);
  p.upper.resize(k);
  std::uniform_real_distribution<double> ud(-2.0, 2.0);
  std::uniform_int_distribution<int> id(-2, 2);
  for (std::size_t j = 0; j < k; ++j) {
    const double a = ud(rng), b = ud(rng);
    p.lower[j] = std::min(a, b);
    p.upper[j] = std::max(a, b);
  }
  p.eq_matrix = Matrix(m, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) p.eq_matrix(i, j) = integer ? id(rng) : ud(rng);
  Vector x0(k);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  for (std::size_t j = 0; j < k; ++j) x0[j] = p.lower[j] + t(rng) * (p.upper[j] - p.lower[j]);
  p.eq_rhs = p.eq_matrix.apply(x0);
  p.objective = ts::uniform(rng, k, -1.0, 1.0);
  return p;
}

}  // namespace

TEST_SUITE("lpcore") {

TEST_CASE("bounds only") {
  const auto r = lp::solve(make({-1}, {1}, 0, {}, {}, {1}));
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.value == 1.0);
  CHECK(r.solution == Vector{1.0});
}

TEST_CASE("pure feasibility") {
  const auto r = lp::solve(make({-1, -1}, {1, 1}, 1, {1, 1}, {0}, {0, 0}));
  REQUIRE(r.status == Status::kOptimal);
  CHECK(std::abs(r.solution[0] + r.solution[1]) <= 1e-12);
  CHECK(r.residual_norm <= 1e-12);
}

TEST_CASE("single feasible point") {
  const auto r = lp::solve(make({-1, -1}, {1, 1}, 1, {1, -1}, {2}, {1, 1}));
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.solution[0] == doctest::Approx(1.0));
  CHECK(r.solution[1] == doctest::Approx(-1.0));
}

TEST_CASE("infeasible") {
  CHECK(lp::solve(make({-1, -1}, {1, 1}, 1, {1, -1}, {3}, {1, 1})).status == Status::kInfeasible);
  CHECK(lp::solve(make({0, 0}, {1, 1}, 2, {1, 1, 1, 1}, {0, 1}, {0, 0})).status ==
        Status::kInfeasible);
}

TEST_CASE("redundant and fixed rows") {
  // Duplicate equality rows and a variable fixed by its bounds.
  const auto r =
      lp::solve(make({0, 0, 0.5}, {1, 1, 0.5}, 2, {1, 1, 0, 2, 2, 0}, {1, 2}, {1, 2, 3}));
  REQUIRE(r.status == Status::kOptimal);
  CHECK(r.value == doctest::Approx(2.0 + 1.5));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(lp::solve(make({1}, {0}, 0, {}, {}, {1})), std::invalid_argument);
  CHECK_THROWS_AS(lp::solve(make({0}, {1}, 0, {}, {}, {NAN})), std::invalid_argument);
  CHECK_THROWS_AS(lp::solve(make({0}, {1}, 0, {}, {}, {1}), 0.0), std::invalid_argument);
}

TEST_CASE("agrees with vertex enumeration on random instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t k = 1 + trial % 6;
    const std::size_t m = trial % (k + 1);
    const BoxEqLP p = random_lp(rng, k, m, trial % 3 == 0);
    const auto r = lp::solve(p);
    const auto ref = oracle::enumerate_lp(p.lower, p.upper, to_rows(p.eq_matrix), p.eq_rhs,
                                          p.objective);
    REQUIRE(ref.feasible);
    REQUIRE(r.status == Status::kOptimal);
    CHECK(std::abs(r.value - ref.value) <= 1e-8);
    CHECK(r.residual_norm <= 1e-8);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(r.solution[j] >= p.lower[j] - 1e-9);
      CHECK(r.solution[j] <= p.upper[j] + 1e-9);
    }
  }
}

TEST_CASE("detects infeasibility found by enumeration") {
  std::mt19937_64 rng(22);
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = 2 + trial % 4;
    const std::size_t m = 1 + trial % k;
    BoxEqLP p = random_lp(rng, k, m, true);
    p.eq_rhs = ts::uniform(rng, m, -6.0, 6.0);
    const auto ref = oracle::enumerate_lp(p.lower, p.upper, to_rows(p.eq_matrix), p.eq_rhs,
                                          p.objective, 1e-9);
    const auto r = lp::solve(p);
    if (!ref.feasible) {
      ++infeasible;
      CHECK(r.status == Status::kInfeasible);
    } else if (r.status == Status::kOptimal) {
      CHECK(std::abs(r.value - ref.value) <= 1e-7);
    }
  }
  CHECK(infeasible > 20);
}

TEST_CASE("positive scaling of the objective") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 5;
    BoxEqLP p = random_lp(rng, k, trial % k, false);
    const auto r1 = lp::solve(p);
    const double lambda = 0.1 + 5.0 * (trial % 7);
    for (double& c : p.objective) c *= lambda;
    const auto r2 = lp::solve(p);
    REQUIRE(r1.status == Status::kOptimal);
    REQUIRE(r2.status == Status::kOptimal);
    CHECK(std::abs(r2.value - lambda * r1.value) <= 1e-8 * std::max(1.0, lambda));
    // The second optimizer is optimal for the unscaled problem as well.
    double v = 0.0;
    for (std::size_t j = 0; j < k; ++j) v += p.objective[j] / lambda * r2.solution[j];
    CHECK(std::abs(v - r1.value) <= 1e-8);
  }
}

TEST_CASE("min infinity norm") {
  auto one = [](double a) {
    Matrix m(1, 1);
    m(0, 0) = a;
    return m;
  };
  CHECK(lp::feasibility_min_infinity_norm(Vector{-1}, Vector{1}, one(1)).value ==
        doctest::Approx(0.0));
  CHECK(lp::feasibility_min_infinity_norm(Vector{2}, Vector{3}, one(1)).value ==
        doctest::Approx(2.0));
  Matrix row(1, 2);
  row(0, 0) = row(0, 1) = 1.0;
  const auto r = lp::feasibility_min_infinity_norm(Vector{-1, 1}, Vector{1, 1}, row);
  CHECK(r.status == Status::kOptimal);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.x[0] == doctest::Approx(-1.0));
}

TEST_CASE("min infinity norm matches enumeration") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 4;
    const std::size_t m = 1 + trial % 3;
    BoxEqLP p = random_lp(rng, k, m, false);
    const auto r = lp::feasibility_min_infinity_norm(p.lower, p.upper, p.eq_matrix);
    REQUIRE(r.status == Status::kOptimal);
    // Epigraph form: variables (x, t), max -t, -t <= (Ax)_i <= t via slacks.
    const std::size_t nv = k + 1 + 2 * m;
    oracle::Vec lo(nv, 0.0), hi(nv, 1e3), c(nv, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      lo[j] = p.lower[j];
      hi[j] = p.upper[j];
    }
    c[k] = -1.0;
    oracle::Mat a(2 * m, oracle::Vec(nv, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = p.eq_matrix(i, j);
        a[m + i][j] = p.eq_matrix(i, j);
      }
      a[i][k] = -1.0;
      a[i][k + 1 + i] = 1.0;  // Ax - t + s = 0
      a[m + i][k] = 1.0;
      a[m + i][k + 1 + m + i] = -1.0;  // Ax + t - s' = 0
    }
    if (nv > 12) continue;
    const auto ref = oracle::enumerate_lp(lo, hi, a, oracle::Vec(2 * m, 0.0), c);
    REQUIRE(ref.feasible);
    CHECK(std::abs(r.value + ref.value) <= 1e-8);
    CHECK(norm_inf(p.eq_matrix.apply(r.x)) <= r.value + 1e-8);
  }
}

}  // TEST_SUITE
