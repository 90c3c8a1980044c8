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

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "l1landscape/dynamics.h"
#include "l1landscape/format.h"

namespace l1landscape {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& t) {
  std::ostringstream os;
  const std::size_t n = t.rows.empty() ? 0 : t.rows.front().u.size();
  os << "iter";
  for (std::size_t i = 1; i <= n; ++i) os << ",u_" << i;
  os << ",f,dist_gt,dist_spurious,step\r\n";
  for (const TrajectoryRow& r : t.rows) {
    os << r.iter;
    for (double v : r.u) os << ',' << format_double(v);
    os << ',' << format_double(r.f) << ',' << format_double(r.dist_gt) << ','
       << format_double(r.dist_spurious) << ',' << format_double(r.step) << "\r\n";
  }
  return os.str();
}

std::string conjecture_report_json(const ConjectureReport& r, bool include_trials) {
  using nlohmann::json;
  const ProbeConfig& c = r.config;
  json j;
  j["ground_truth"] = r.ustar;
  j["config"] = {
      {"trials", c.trials},
      {"max_iters", c.max_iters},
      {"tau_succ", c.tau_succ},
      {"tau_trap", c.tau_trap},
      {"seed", c.seed},
      {"selection", c.selection_name},
      {"init", {{"kind", std::string(to_string(c.init.kind))}, {"scale", c.init.scale}}},
      {"schedule",
       {{"kind", std::string(to_string(c.schedule.kind))},
        {"c", c.schedule.c},
        {"q", c.schedule.q},
        {"summable", c.schedule.is_summable()}}},
  };
  j["successes"] = r.successes;
  j["trapped"] = r.trapped;
  j["undecided"] = r.undecided;
  j["success_fraction"] =
      c.trials > 0 ? static_cast<double>(r.successes) / static_cast<double>(c.trials) : 0.0;
  if (include_trials) {
    json trials = json::array();
    for (std::size_t i = 0; i < r.results.size(); ++i) {
      const TrialResult& t = r.results[i];
      trials.push_back({{"index", i},
                        {"seed", t.seed},
                        {"init", t.init},
                        {"final", t.final_point},
                        {"iterations", t.iterations},
                        {"dist_gt", t.dist_gt},
                        {"dist_spurious", t.dist_spurious},
                        {"outcome", std::string(to_string(t.outcome))}});
    }
    j["trials"] = std::move(trials);
  }
  return j.dump(2);
}

}  // namespace l1landscape
