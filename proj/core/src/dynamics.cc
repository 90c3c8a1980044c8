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

#include "l1landscape/dynamics.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "l1landscape/errors.h"
#include "l1landscape/objective.h"
#include "l1landscape/random.h"
#include "l1landscape/residual.h"
#include "l1landscape/sign.h"
#include "l1landscape/stationarity.h"

namespace l1landscape {

double StepSchedule::step(std::size_t k) const {
  const double kk = static_cast<double>(k == 0 ? 1 : k);
  switch (kind) {
    case ScheduleKind::kInvK: return c / kk;
    case ScheduleKind::kInvSqrtK: return c / std::sqrt(kk);
    case ScheduleKind::kGeometric: return c * std::pow(q, kk);
  }
  return 0.0;
}

void StepSchedule::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("StepSchedule: c must be > 0");
  if (kind == ScheduleKind::kGeometric && !(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("StepSchedule: q must lie in (0, 1)");
  }
}

std::string_view to_string(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::kInvK: return "inv-k";
    case ScheduleKind::kInvSqrtK: return "inv-sqrt-k";
    case ScheduleKind::kGeometric: return "geometric";
  }
  return "unknown";
}

ScheduleKind parse_schedule_kind(std::string_view s) {
  if (s == "inv-k") return ScheduleKind::kInvK;
  if (s == "inv-sqrt-k") return ScheduleKind::kInvSqrtK;
  if (s == "geometric") return ScheduleKind::kGeometric;
  throw std::invalid_argument("unknown schedule '" + std::string(s) +
                              "' (expected inv-k, inv-sqrt-k or geometric)");
}

std::string_view to_string(InitKind k) {
  switch (k) {
    case InitKind::kGaussian: return "gaussian";
    case InitKind::kHyperplane: return "hyperplane";
    case InitKind::kFixed: return "fixed";
  }
  return "unknown";
}

InitKind parse_init_kind(std::string_view s) {
  if (s == "gaussian") return InitKind::kGaussian;
  if (s == "hyperplane") return InitKind::kHyperplane;
  if (s == "fixed") return InitKind::kFixed;
  throw std::invalid_argument("unknown init distribution '" + std::string(s) +
                              "' (expected gaussian, hyperplane or fixed)");
}

std::string_view to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::kSuccess: return "success";
    case TrialOutcome::kTrapped: return "trapped";
    case TrialOutcome::kUndecided: return "undecided";
  }
  return "unknown";
}

Trajectory run_subgradient(std::span<const double> u0, std::span<const double> ustar,
                           const StepSchedule& schedule, const SubgradientOptions& opts) {
  require_same_dim(u0, ustar, "run_subgradient");
  require_finite(u0, "run_subgradient");
  schedule.validate();
  if (opts.max_iters == 0) throw std::invalid_argument("run_subgradient: max_iters must be >= 1");

  auto make_row = [&](std::size_t k, const Vector& u, double step) {
    return TrajectoryRow{k, u, objective(u, ustar), distance_to_ground_truths(u, ustar),
                         distance_to_spurious_set(u, ustar), step};
  };

  Trajectory tr;
  Vector u(u0.begin(), u0.end());
  tr.rows.push_back(make_row(0, u, 0.0));
  double dist_gt = tr.rows.front().dist_gt;
  std::size_t k = 0;
  double last_step = 0.0;
  while (k < opts.max_iters && dist_gt > opts.stop_tol) {
    const SubdifferentialModel model = SubdifferentialModel::Build(u, ustar);
    const Vector g = selection_matrix(model, ustar, opts.selection).apply(u);
    ++k;
    last_step = schedule.step(k);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= last_step * g[i];
    dist_gt = distance_to_ground_truths(u, ustar);
    // Divergence is recorded, not raised.
    if (!std::isfinite(dist_gt)) break;
    if (opts.record_all) tr.rows.push_back(make_row(k, u, last_step));
  }
  if (!opts.record_all && k > 0) tr.rows.push_back(make_row(k, u, last_step));
  tr.reached_ground_truth = dist_gt <= opts.stop_tol;
  return tr;
}

Vector sample_init(const InitDistribution& dist, std::span<const double> ustar,
                   std::uint64_t seed) {
  const std::size_t n = ustar.size();
  if (dist.kind == InitKind::kFixed) {
    require_same_dim(dist.fixed_point, ustar, "sample_init");
    return dist.fixed_point;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector u(n);
  for (double& v : u) v = dist.scale * normal(rng);
  if (dist.kind == InitKind::kHyperplane) {
    Vector s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = sign_of(ustar[i]);
    const double ss = dot(s, s);
    if (ss > 0.0) u = axpy(u, -dot(s, u) / ss, s);
  }
  return u;
}

ConjectureReport conjecture_probe(std::span<const double> ustar, const ProbeConfig& config) {
  require_finite(ustar, "conjecture_probe");
  if (config.trials == 0) throw std::invalid_argument("conjecture_probe: trials must be >= 1");
  config.schedule.validate();

  ConjectureReport report;
  report.ustar.assign(ustar.begin(), ustar.end());
  report.config = config;
  report.results.resize(config.trials);

  SubgradientOptions opts;
  opts.max_iters = config.max_iters;
  opts.stop_tol = config.tau_succ;
  opts.selection = config.selection;
  opts.record_all = false;

  parallel_for(config.trials, [&](std::size_t t) {
    TrialResult& r = report.results[t];
    r.seed = mix_seed(config.seed ^ static_cast<std::uint64_t>(t));
    r.init = sample_init(config.init, ustar, r.seed);
    const Trajectory tr = run_subgradient(r.init, ustar, config.schedule, opts);
    const TrajectoryRow& last = tr.rows.back();
    r.final_point = last.u;
    r.iterations = last.iter;
    r.dist_gt = last.dist_gt;
    r.dist_spurious = last.dist_spurious;
    if (r.dist_gt <= config.tau_succ) {
      r.outcome = TrialOutcome::kSuccess;
    } else if (r.dist_spurious <= config.tau_trap) {
      r.outcome = TrialOutcome::kTrapped;
    } else {
      r.outcome = TrialOutcome::kUndecided;
    }
  });

  for (const TrialResult& r : report.results) {
    switch (r.outcome) {
      case TrialOutcome::kSuccess: ++report.successes; break;
      case TrialOutcome::kTrapped: ++report.trapped; break;
      case TrialOutcome::kUndecided: ++report.undecided; break;
    }
  }
  return report;
}

std::vector<FlowSample> flow_field(std::span<const double> ustar, const FlowGrid& grid) {
  if (ustar.size() != 2) throw DimensionMismatch("flow_field: u* must be two-dimensional");
  require_finite(ustar, "flow_field");
  if (grid.nx == 0 || grid.ny == 0) throw std::invalid_argument("flow_field: empty grid");
  auto coord = [](double lo, double hi, std::size_t count, std::size_t i) {
    if (count == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  std::vector<FlowSample> out;
  out.reserve(grid.nx * grid.ny);
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      FlowSample s;
      s.point = {coord(grid.xmin, grid.xmax, grid.nx, ix), coord(grid.ymin, grid.ymax, grid.ny, iy)};
      const Vector g = subgradient_select(s.point, ustar);
      const double len = norm2(g);
      s.direction = len > kDefaultEpsZero ? scale(-1.0 / len, g) : Vector(2, 0.0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace l1landscape
