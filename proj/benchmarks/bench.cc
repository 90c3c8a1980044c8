// Copyright 2026 The l1landscape Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "l1landscape/dynamics.h"
#include "l1landscape/lp.h"
#include "l1landscape/objective.h"
#include "l1landscape/second_order.h"
#include "l1landscape/stationarity.h"

namespace {

using namespace l1landscape;

Vector gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd;
  Vector v(n);
  for (double& x : v) x = nd(rng);
  return v;
}

// A feasible random box LP with m rows and k columns.
lp::BoxEqLP random_lp(std::size_t m, std::size_t k) {
  std::mt19937_64 rng(17);
  lp::BoxEqLP p;
  p.lower.assign(k, -1.0);
  p.upper.assign(k, 1.0);
  p.eq_matrix = Matrix(m, k);
  const Vector x0 = [&] {
    std::uniform_real_distribution<double> ud(-0.5, 0.5);
    Vector x(k);
    for (double& v : x) v = ud(rng);
    return x;
  }();
  p.eq_rhs.assign(m, 0.0);
  std::normal_distribution<double> nd;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      p.eq_matrix(i, j) = nd(rng);
      p.eq_rhs[i] += p.eq_matrix(i, j) * x0[j];
    }
  p.objective = gaussian(rng, k);
  return p;
}

void BM_LpSolve(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const lp::BoxEqLP p = random_lp(m, 3 * m);
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(p));
}
BENCHMARK(BM_LpSolve)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Objective(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Vector u = gaussian(rng, n), us = gaussian(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(objective(u, us));
}
BENCHMARK(BM_Objective)->Arg(4)->Arg(16)->Arg(64);

void BM_StationarityLp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Vector us = gaussian(rng, n);
  const Vector u = project_to_spurious_set(gaussian(rng, n), us).point;
  for (auto _ : state) benchmark::DoNotOptimize(is_stationary_lp(u, us));
}
BENCHMARK(BM_StationarityLp)->Arg(2)->Arg(4)->Arg(8);

void BM_SecondSubderivative(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Vector us = gaussian(rng, n);
  const Vector u = project_to_spurious_set(gaussian(rng, n), us).point;
  const Vector w = sub(us, u);
  for (auto _ : state) benchmark::DoNotOptimize(second_subderivative(u, us, w));
}
BENCHMARK(BM_SecondSubderivative)->Arg(2)->Arg(4)->Arg(8);

void BM_Subgradient(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const Vector us = gaussian(rng, 8), u0 = gaussian(rng, 8);
  SubgradientOptions opts;
  opts.max_iters = static_cast<std::size_t>(state.range(0));
  opts.stop_tol = 0.0;
  opts.record_all = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_subgradient(u0, us, StepSchedule{}, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Subgradient)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
