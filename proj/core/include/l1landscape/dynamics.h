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

#ifndef L1LANDSCAPE_DYNAMICS_H_
#define L1LANDSCAPE_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "l1landscape/linalg.h"
#include "l1landscape/subdifferential.h"

namespace l1landscape {

enum class ScheduleKind { kInvK, kInvSqrtK, kGeometric };

// alpha_k for k >= 1: c/k, c/sqrt(k) or c q^k. The first two are diminishing
// and non-summable; geometric is summable and only meant for contrast runs.
struct StepSchedule {
  ScheduleKind kind = ScheduleKind::kInvSqrtK;
  double c = 0.1;
  double q = 0.5;

  double step(std::size_t k) const;
  bool is_summable() const { return kind == ScheduleKind::kGeometric; }
  // Throws std::invalid_argument for c <= 0 or q outside (0, 1).
  void validate() const;
};

std::string_view to_string(ScheduleKind k);
// Accepts "inv-k", "inv-sqrt-k", "geometric".
ScheduleKind parse_schedule_kind(std::string_view s);

struct TrajectoryRow {
  std::size_t iter = 0;
  Vector u;
  double f = 0.0;
  double dist_gt = 0.0;
  double dist_spurious = 0.0;
  double step = 0.0;  // alpha used to reach this iterate; 0 for the start
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  bool reached_ground_truth = false;
};

struct SubgradientOptions {
  std::size_t max_iters = 20000;
  double stop_tol = 1e-2;  // stop once dist to {+-u*} <= stop_tol
  SelectionRule selection = MidpointSelection{};
  // When false only the first and the last iterate are stored.
  bool record_all = true;
};

// u_{k+1} = u_k - alpha_{k+1} g_k with g_k chosen by the selection rule.
Trajectory run_subgradient(std::span<const double> u0, std::span<const double> ustar,
                           const StepSchedule& schedule, const SubgradientOptions& opts = {});

enum class InitKind {
  kGaussian,         // standard Gaussian
  kHyperplane,       // Gaussian projected onto Sign(u*)^T u = 0 (measure zero)
  kFixed,            // the supplied point
};
std::string_view to_string(InitKind k);
InitKind parse_init_kind(std::string_view s);

struct InitDistribution {
  InitKind kind = InitKind::kGaussian;
  double scale = 1.0;
  Vector fixed_point;  // kFixed only
};

Vector sample_init(const InitDistribution& dist, std::span<const double> ustar,
                   std::uint64_t seed);

enum class TrialOutcome { kSuccess, kTrapped, kUndecided };
std::string_view to_string(TrialOutcome o);

struct TrialResult {
  std::uint64_t seed = 0;
  Vector init;
  Vector final_point;
  std::size_t iterations = 0;
  double dist_gt = 0.0;
  double dist_spurious = 0.0;
  TrialOutcome outcome = TrialOutcome::kUndecided;
};

struct ProbeConfig {
  InitDistribution init;
  StepSchedule schedule;
  std::size_t trials = 200;
  std::size_t max_iters = 20000;
  double tau_succ = 1e-2;
  double tau_trap = 1e-3;
  std::uint64_t seed = 0;
  SelectionRule selection = MidpointSelection{};
  std::string selection_name = "midpoint";
};

struct ConjectureReport {
  Vector ustar;
  ProbeConfig config;
  std::size_t successes = 0;
  std::size_t trapped = 0;
  std::size_t undecided = 0;
  std::vector<TrialResult> results;  // ordered by trial index
};

// Independent subgradient runs from random starts; trial i uses the stream
// derived from (seed, i). Deterministic in (ustar, config).
ConjectureReport conjecture_probe(std::span<const double> ustar, const ProbeConfig& config);

struct FlowGrid {
  double xmin = -2.0, xmax = 2.0;
  double ymin = -2.0, ymax = 2.0;
  std::size_t nx = 21, ny = 21;
};

struct FlowSample {
  Vector point;
  Vector direction;  // unit vector, or zero where the midpoint subgradient vanishes
};

// Normalized negative midpoint subgradient on a uniform 2-D grid, row-major
// with x varying fastest. Throws DimensionMismatch unless u* has dimension 2.
std::vector<FlowSample> flow_field(std::span<const double> ustar, const FlowGrid& grid = {});

// CSV with header iter,u_1..u_n,f,dist_gt,dist_spurious,step; 17 significant digits.
std::string trajectory_csv(const Trajectory& t);
std::string conjecture_report_json(const ConjectureReport& r, bool include_trials = true);

}  // namespace l1landscape

#endif  // L1LANDSCAPE_DYNAMICS_H_
