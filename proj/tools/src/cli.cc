#include "l1landscape_cli/cli.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <type_traits>

#include "CLI11.hpp"
#include "json.hpp"
#include "l1landscape/errors.h"
#include "l1landscape/first_order.h"
#include "l1landscape/format.h"
#include "l1landscape/second_order.h"
#include "l1landscape/stationarity.h"
#include "l1landscape/tilting.h"

namespace l1landscape::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Inconsistent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by every leaf command.
struct Common {
  std::string config;
  std::string out;
  std::string ground_truth;
  std::uint64_t seed = 0;
  double eps_zero = kDefaultEpsZero;
  double eps_lp = kDefaultEpsLp;
};

void add_common(CLI::App* sub, Common& c, bool with_ground_truth) {
  sub->add_option("--config", c.config, "JSON file with option defaults (keys are long option names)");
  sub->add_option("-o,--out", c.out, "Output file (default: stdout)");
  sub->add_option("-s,--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--eps-zero", c.eps_zero, "Zero tolerance for residual entries")
      ->capture_default_str();
  sub->add_option("--eps-lp", c.eps_lp, "LP feasibility tolerance")->capture_default_str();
  if (with_ground_truth) {
    sub->add_option("-g,--ground-truth", c.ground_truth, "Ground truth u*, e.g. 1,1");
  }
}

std::string json_to_arg(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += json_to_arg(v[i]);
    }
    return s;
  }
  throw UsageError("config: unsupported value " + v.dump());
}

// Fills options that were not given on the command line from the JSON file.
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "config") continue;
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("config: unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    opt->add_result(json_to_arg(value));
    opt->run_callback();
  }
}

void validate_common(const Common& c) {
  if (!(c.eps_zero > 0.0) || !(c.eps_lp > 0.0)) throw UsageError("tolerances must be > 0");
}

Vector require_vector(const std::string& text, const char* name) {
  if (text.empty()) throw UsageError(std::string("missing required option ") + name);
  try {
    return parse_vector(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

void emit(const Common& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty() || c.out == "-") {
    out << payload;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.out + "'");
  f << payload;
  if (!f) throw UsageError("failed writing '" + c.out + "'");
}

json vec_json(std::span<const double> v) { return json(Vector(v.begin(), v.end())); }

template <class T>
json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Vector>) {
    return vec_json(*v);
  } else {
    return *v;
  }
}

struct ScheduleArgs {
  std::string kind = "inv-sqrt-k";
  double scale = 0.1;
  double ratio = 0.5;
};

void add_schedule(CLI::App* sub, ScheduleArgs& s) {
  sub->add_option("--schedule", s.kind, "Step schedule: inv-k, inv-sqrt-k or geometric")
      ->capture_default_str();
  sub->add_option("--step-scale", s.scale, "Step constant c")->capture_default_str();
  sub->add_option("--step-ratio", s.ratio, "Geometric ratio q")->capture_default_str();
}

StepSchedule make_schedule(const ScheduleArgs& s) {
  StepSchedule out;
  try {
    out.kind = parse_schedule_kind(s.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out.c = s.scale;
  out.q = s.ratio;
  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out;
}

std::pair<SelectionRule, std::string> make_selection(const std::string& name) {
  if (name == "midpoint") return {MidpointSelection{}, name};
  if (name == "anti-ground-truth") return {AntiGroundTruthSelection{}, name};
  throw UsageError("unknown selection '" + name + "' (expected midpoint or anti-ground-truth)");
}

// ---- certify ---------------------------------------------------------------

struct CertifyArgs {
  Common common;
  std::string point;
};

json certify_json(std::span<const double> u, std::span<const double> ustar, const Common& c,
                  bool& agree) {
  const StationarityVerdict closed = is_stationary_closed_form(u, ustar, c.eps_zero);
  const StationarityVerdict lp = is_stationary_lp(u, ustar, c.eps_zero, c.eps_lp);
  agree = closed.is_stationary == lp.is_stationary && closed.kind == lp.kind;

  json j;
  j["point"] = vec_json(u);
  j["ground_truth"] = vec_json(ustar);
  j["closed_form"] = {{"stationary", closed.is_stationary},
                      {"kind", std::string(to_string(closed.kind))}};
  j["lp"] = {{"stationary", lp.is_stationary},
             {"kind", std::string(to_string(lp.kind))},
             {"violation", opt_json(lp.violation)}};
  j["agree"] = agree;

  const PointClassification cls = classify_point(u, ustar, {c.eps_zero, c.eps_lp, kDefaultEpsDir});
  j["kind"] = std::string(to_string(cls.kind));
  j["curvature"] = opt_json(cls.curvature);
  j["escape_direction"] = opt_json(cls.escape_direction);
  j["descent_direction"] = opt_json(cls.descent_direction);
  j["descent_slope"] = opt_json(cls.descent_slope);
  return j;
}

int run_certify(const CertifyArgs& a, std::ostream& out) {
  validate_common(a.common);
  const Vector ustar = require_vector(a.common.ground_truth, "--ground-truth");
  const Vector u = require_vector(a.point, "--point");
  if (u.size() != ustar.size()) throw UsageError("--point and --ground-truth differ in length");
  bool agree = true;
  const json j = certify_json(u, ustar, a.common, agree);
  emit(a.common, j.dump(2) + "\n", out);
  if (!agree) throw Inconsistent("closed-form and LP certifiers disagree");
  return kExitOk;
}

// ---- flow / landscape ------------------------------------------------------

struct GridArgs {
  std::string xlim = "-2,2";
  std::string ylim = "-2,2";
  std::size_t nx = 21;
  std::size_t ny = 21;
};

void add_grid(CLI::App* sub, GridArgs& g) {
  sub->add_option("--xlim", g.xlim, "x range lo,hi")->capture_default_str();
  sub->add_option("--ylim", g.ylim, "y range lo,hi")->capture_default_str();
  sub->add_option("--nx", g.nx, "Grid points along x")->capture_default_str();
  sub->add_option("--ny", g.ny, "Grid points along y")->capture_default_str();
}

FlowGrid make_grid(const GridArgs& g) {
  const Vector xl = require_vector(g.xlim, "--xlim");
  const Vector yl = require_vector(g.ylim, "--ylim");
  if (xl.size() != 2 || yl.size() != 2) throw UsageError("--xlim/--ylim take two values");
  if (!(xl[0] < xl[1]) || !(yl[0] < yl[1])) throw UsageError("grid ranges must be increasing");
  if (g.nx == 0 || g.ny == 0) throw UsageError("grid must have at least one point per axis");
  return FlowGrid{xl[0], xl[1], yl[0], yl[1], g.nx, g.ny};
}

Vector planar_ground_truth(const Common& c) {
  const Vector ustar = require_vector(c.ground_truth, "--ground-truth");
  if (ustar.size() != 2) throw UsageError("this command needs a two-dimensional ground truth");
  return ustar;
}

int run_flow(const Common& c, const GridArgs& g, std::ostream& out) {
  validate_common(c);
  const Vector ustar = planar_ground_truth(c);
  emit(c, flow_svg(ustar, make_grid(g)), out);
  return kExitOk;
}

int run_landscape(const Common& c, const GridArgs& g, std::ostream& out) {
  validate_common(c);
  const Vector ustar = planar_ground_truth(c);
  const FlowGrid grid = make_grid(g);
  auto coord = [](double lo, double hi, std::size_t n, std::size_t i) {
    return n == 1 ? 0.5 * (lo + hi)
                  : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::ostringstream os;
  os << "x,y,closed_form,lp,agree,kind\r\n";
  std::size_t disagreements = 0;
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const Vector u = {coord(grid.xmin, grid.xmax, grid.nx, ix),
                        coord(grid.ymin, grid.ymax, grid.ny, iy)};
      const StationarityVerdict closed = is_stationary_closed_form(u, ustar, c.eps_zero);
      const StationarityVerdict lp = is_stationary_lp(u, ustar, c.eps_zero, c.eps_lp);
      const bool agree = closed.kind == lp.kind;
      if (!agree) ++disagreements;
      const PointClassification cls =
          classify_point(u, ustar, {c.eps_zero, c.eps_lp, kDefaultEpsDir});
      os << format_double(u[0]) << ',' << format_double(u[1]) << ',' << to_string(closed.kind)
         << ',' << to_string(lp.kind) << ',' << (agree ? "true" : "false") << ','
         << to_string(cls.kind) << "\r\n";
    }
  }
  emit(c, os.str(), out);
  if (disagreements > 0) {
    throw Inconsistent(std::to_string(disagreements) + " grid points with certifier disagreement");
  }
  return kExitOk;
}

// ---- descend / conjecture --------------------------------------------------

struct DescendArgs {
  Common common;
  ScheduleArgs schedule;
  std::string u0 = "random";
  std::size_t max_iters = 20000;
  double stop_tol = 1e-2;
  std::string selection = "midpoint";
  bool endpoints_only = false;
};

int run_descend(const DescendArgs& a, std::ostream& out) {
  validate_common(a.common);
  const Vector ustar = require_vector(a.common.ground_truth, "--ground-truth");
  Vector u0;
  if (a.u0 == "random") {
    u0 = sample_init(InitDistribution{}, ustar, a.common.seed);
  } else {
    u0 = require_vector(a.u0, "--u0");
    if (u0.size() != ustar.size()) throw UsageError("--u0 and --ground-truth differ in length");
  }
  SubgradientOptions opts;
  opts.max_iters = a.max_iters;
  opts.stop_tol = a.stop_tol;
  opts.selection = make_selection(a.selection).first;
  opts.record_all = !a.endpoints_only;
  const Trajectory t = run_subgradient(u0, ustar, make_schedule(a.schedule), opts);
  emit(a.common, trajectory_csv(t), out);
  return kExitOk;
}

struct ConjectureArgs {
  Common common;
  ScheduleArgs schedule;
  std::string init = "gaussian";
  std::string init_point;
  double scale = 1.0;
  std::size_t trials = 200;
  std::size_t max_iters = 20000;
  double tau_succ = 1e-2;
  double tau_trap = 1e-3;
  std::string selection = "midpoint";
  bool summary_only = false;
};

int run_conjecture(const ConjectureArgs& a, std::ostream& out) {
  validate_common(a.common);
  const Vector ustar = require_vector(a.common.ground_truth, "--ground-truth");
  ProbeConfig cfg;
  try {
    cfg.init.kind = parse_init_kind(a.init);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  cfg.init.scale = a.scale;
  if (cfg.init.kind == InitKind::kFixed) {
    cfg.init.fixed_point = require_vector(a.init_point, "--init-point");
    if (cfg.init.fixed_point.size() != ustar.size()) {
      throw UsageError("--init-point and --ground-truth differ in length");
    }
  }
  if (!(a.scale > 0.0)) throw UsageError("--scale must be > 0");
  if (!(a.tau_succ > 0.0) || !(a.tau_trap > 0.0)) throw UsageError("thresholds must be > 0");
  cfg.schedule = make_schedule(a.schedule);
  cfg.trials = a.trials;
  cfg.max_iters = a.max_iters;
  cfg.tau_succ = a.tau_succ;
  cfg.tau_trap = a.tau_trap;
  cfg.seed = a.common.seed;
  std::tie(cfg.selection, cfg.selection_name) = make_selection(a.selection);
  const ConjectureReport r = conjecture_probe(ustar, cfg);
  emit(a.common, conjecture_report_json(r, !a.summary_only) + "\n", out);
  return kExitOk;
}

// ---- gaussian-sep / growth-check -------------------------------------------

struct SepArgs {
  Common common;
  std::size_t n = 16;
  std::size_t trials = 100000;
};

int run_gaussian_sep(const SepArgs& a, std::ostream& out) {
  validate_common(a.common);
  if (a.n == 0 || a.trials < 2) throw UsageError("need n >= 1 and at least two trials");
  const SeparationEstimate e = gaussian_separation(a.n, a.trials, a.common.seed);
  const json j = {{"n", a.n},
                  {"trials", a.trials},
                  {"seed", a.common.seed},
                  {"mean", e.mean},
                  {"std_error", e.std_error},
                  {"expected", e.expected},
                  {"z_score", e.std_error > 0.0 ? (e.mean - e.expected) / e.std_error : 0.0}};
  emit(a.common, j.dump(2) + "\n", out);
  return kExitOk;
}

struct GrowthArgs {
  Common common;
  double radius = 0.05;
  std::size_t samples = 1000;
};

int run_growth(const GrowthArgs& a, std::ostream& out) {
  validate_common(a.common);
  const Vector ustar = require_vector(a.common.ground_truth, "--ground-truth");
  if (!(a.radius > 0.0)) throw UsageError("--radius must be > 0");
  const GrowthReport r = growth_check(ustar, a.radius, a.samples, a.common.seed);
  const json j = {{"ground_truth", ustar},
                  {"sharpness_coefficient", sharpness_coefficient(ustar)},
                  {"beta_hat", r.beta_hat},
                  {"radius", r.radius},
                  {"samples", r.samples},
                  {"violations", r.violations},
                  {"worst_margin", r.worst_margin}};
  emit(a.common, j.dump(2) + "\n", out);
  return kExitOk;
}

// ---- tilt ------------------------------------------------------------------

json cert_json(const tilting::SharpnessCertificate& c) {
  json ivs = json::array();
  for (const auto& iv : c.tilted_subdifferential) ivs.push_back({iv.lo, iv.hi});
  return {{"certified", c.certified}, {"modulus", c.modulus}, {"tilted_subdifferential", ivs}};
}

struct TiltArgs {
  Common ex42, ex43, ex41, sample;
  double x = 3.0;
  double a = 0.45;
  std::string a_vec = "-1,1";
  std::string point = "-1,1";
  double probe_a = 0.01;
  double probe_x = 3.0;
  ScheduleArgs probe_schedule{"inv-sqrt-k", 100.0, 0.5};
  std::size_t probe_iters = 1000000;
  double threshold = 1e3;
  std::string fn = "ex42";
  double sample_a = 0.45;
  double xmin = -4.0;
  double xmax = 4.0;
  std::size_t count = 801;
};

int run_tilt_ex42(const TiltArgs& t, std::ostream& out) {
  validate_common(t.ex42);
  json j = cert_json(tilting::certify_sharp_local_min_1d(tilting::ScalarFn::kEx42, t.x, t.a));
  j["function"] = "ex42";
  j["x0"] = t.x;
  j["a"] = t.a;
  emit(t.ex42, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_tilt_ex43(const TiltArgs& t, std::ostream& out) {
  validate_common(t.ex43);
  const Vector ustar = t.ex43.ground_truth.empty() ? Vector{1.0, 1.0}
                                                   : require_vector(t.ex43.ground_truth, "--ground-truth");
  const Vector u0 = require_vector(t.point, "--point");
  const Vector a = require_vector(t.a_vec, "--tilt");
  tilting::SharpnessCertificate c;
  try {
    c = tilting::certify_sharp_local_min_tilted_f(ustar, u0, a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = cert_json(c);
  j["ground_truth"] = ustar;
  j["point"] = u0;
  j["a"] = a;
  emit(t.ex43, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_tilt_ex41(const TiltArgs& t, std::ostream& out) {
  validate_common(t.ex41);
  if (!(t.threshold > 0.0)) throw UsageError("--threshold must be > 0");
  const tilting::DivergenceReport r = tilting::tilt_divergence_probe_ex41(
      t.probe_a, t.probe_x, make_schedule(t.probe_schedule), t.probe_iters, t.threshold);
  const json j = {{"a", r.a},
                  {"x0", r.x0},
                  {"schedule",
                   {{"kind", t.probe_schedule.kind},
                    {"c", t.probe_schedule.scale},
                    {"q", t.probe_schedule.ratio}}},
                  {"iterations", r.iterations},
                  {"last_iterate", r.last_iterate},
                  {"threshold", r.threshold},
                  {"escaped", r.escaped}};
  emit(t.ex41, j.dump(2) + "\n", out);
  return kExitOk;
}

int run_tilt_sample(const TiltArgs& t, std::ostream& out) {
  validate_common(t.sample);
  tilting::ScalarFn fn;
  try {
    fn = tilting::parse_scalar_fn(t.fn);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(t.xmin < t.xmax) || t.count < 2) throw UsageError("need xmin < xmax and count >= 2");
  emit(t.sample, tilting::tilt_samples_csv(fn, t.sample_a, t.xmin, t.xmax, t.count), out);
  return kExitOk;
}

// "-u0" is a long option written with one dash; CLI11 would read it as -u 0.
void normalize(std::vector<std::string>& args) {
  for (std::string& s : args) {
    if (s == "-u0") s = "--u0";
  }
}

}  // namespace

Vector parse_vector(const std::string& text) {
  Vector v;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view tok(text.data() + pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(x)) {
      throw std::invalid_argument("'" + text + "' is not a comma-separated list of reals");
    }
    v.push_back(x);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return v;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  normalize(args);

  CLI::App app{"Landscape analysis for the rank-one l1 matrix factorization objective"};
  app.name("l1landscape");
  app.require_subcommand(1);

  CertifyArgs certify;
  CLI::App* c_certify = app.add_subcommand("certify", "Stationarity certificates and classification of a point");
  add_common(c_certify, certify.common, true);
  c_certify->add_option("-u,--point", certify.point, "Point u, e.g. -1,1");

  Common flow_common;
  GridArgs flow_grid;
  CLI::App* c_flow = app.add_subcommand("flow", "SVG of the negative subgradient flow (n = 2)");
  add_common(c_flow, flow_common, true);
  add_grid(c_flow, flow_grid);

  Common land_common;
  GridArgs land_grid;
  CLI::App* c_land = app.add_subcommand("landscape", "Certify every point of a planar grid (CSV)");
  add_common(c_land, land_common, true);
  add_grid(c_land, land_grid);

  DescendArgs descend;
  CLI::App* c_descend = app.add_subcommand("descend", "Subgradient trajectory (CSV)");
  add_common(c_descend, descend.common, true);
  add_schedule(c_descend, descend.schedule);
  c_descend->add_option("--u0", descend.u0, "Start point or 'random'")->capture_default_str();
  c_descend->add_option("--max-iters", descend.max_iters, "Iteration cap")->capture_default_str();
  c_descend->add_option("--stop-tol", descend.stop_tol, "Stop within this distance of +-u*")
      ->capture_default_str();
  c_descend->add_option("--selection", descend.selection, "midpoint or anti-ground-truth")
      ->capture_default_str();
  c_descend->add_flag("--endpoints-only", descend.endpoints_only, "Only emit first and last rows");

  ConjectureArgs conj;
  CLI::App* c_conj = app.add_subcommand("conjecture", "Random-initialization subgradient probe (JSON)");
  add_common(c_conj, conj.common, true);
  add_schedule(c_conj, conj.schedule);
  c_conj->add_option("--init", conj.init, "gaussian, hyperplane or fixed")->capture_default_str();
  c_conj->add_option("--init-point", conj.init_point, "Start point for --init fixed");
  c_conj->add_option("--scale", conj.scale, "Initialization scale")->capture_default_str();
  c_conj->add_option("-t,--trials", conj.trials, "Number of trials")->capture_default_str();
  c_conj->add_option("--max-iters", conj.max_iters, "Iteration cap")->capture_default_str();
  c_conj->add_option("--tau-succ", conj.tau_succ, "Success radius around +-u*")->capture_default_str();
  c_conj->add_option("--tau-trap", conj.tau_trap, "Trap radius around the spurious set")
      ->capture_default_str();
  c_conj->add_option("--selection", conj.selection, "midpoint or anti-ground-truth")
      ->capture_default_str();
  c_conj->add_flag("--summary-only", conj.summary_only, "Omit per-trial records");

  SepArgs sep;
  CLI::App* c_sep = app.add_subcommand("gaussian-sep", "Monte Carlo mean of the l1 norm of a Gaussian vector");
  add_common(c_sep, sep.common, false);
  c_sep->add_option("-n,--dim", sep.n, "Dimension")->capture_default_str();
  c_sep->add_option("-t,--trials", sep.trials, "Number of samples")->capture_default_str();

  GrowthArgs growth;
  CLI::App* c_growth = app.add_subcommand("growth-check", "Sample the sharp growth bound near u*");
  add_common(c_growth, growth.common, true);
  c_growth->add_option("--radius", growth.radius, "l1 radius of the sampled ball")->capture_default_str();
  c_growth->add_option("--samples", growth.samples, "Number of samples")->capture_default_str();

  TiltArgs tilt;
  CLI::App* c_tilt = app.add_subcommand("tilt", "Tilted one-dimensional and planar examples");
  c_tilt->require_subcommand(1);
  CLI::App* t42 = c_tilt->add_subcommand("ex42-certify", "Sharp local minimum test for the floor example");
  add_common(t42, tilt.ex42, false);
  t42->add_option("-x,--x0", tilt.x, "Point")->capture_default_str();
  t42->add_option("-a,--tilt", tilt.a, "Tilt")->capture_default_str();
  CLI::App* t43 = c_tilt->add_subcommand("ex43-certify", "Sharp local minimum test for tilted f at +-(-1,1)");
  add_common(t43, tilt.ex43, true);
  t43->add_option("-u,--point", tilt.point, "Point")->capture_default_str();
  t43->add_option("-a,--tilt", tilt.a_vec, "Tilt vector")->capture_default_str();
  CLI::App* t41 = c_tilt->add_subcommand("ex41-probe", "Gradient descent on the tilted smooth example");
  add_common(t41, tilt.ex41, false);
  add_schedule(t41, tilt.probe_schedule);
  t41->add_option("-a,--tilt", tilt.probe_a, "Tilt")->capture_default_str();
  t41->add_option("-x,--x0", tilt.probe_x, "Start point")->capture_default_str();
  t41->add_option("--max-iters", tilt.probe_iters, "Iteration cap")->capture_default_str();
  t41->add_option("--threshold", tilt.threshold, "Escape threshold on |x|")->capture_default_str();
  CLI::App* tsample = c_tilt->add_subcommand("sample", "CSV samples x,g,h_a");
  add_common(tsample, tilt.sample, false);
  tsample->add_option("--fn", tilt.fn, "ex41 or ex42")->capture_default_str();
  tsample->add_option("-a,--tilt", tilt.sample_a, "Tilt")->capture_default_str();
  tsample->add_option("--xmin", tilt.xmin, "Left end")->capture_default_str();
  tsample->add_option("--xmax", tilt.xmax, "Right end")->capture_default_str();
  tsample->add_option("--count", tilt.count, "Number of samples")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  struct Leaf {
    CLI::App* app;
    const std::string* config;
    std::function<int()> body;
  };
  const std::vector<Leaf> leaves = {
      {c_certify, &certify.common.config, [&] { return run_certify(certify, out); }},
      {c_flow, &flow_common.config, [&] { return run_flow(flow_common, flow_grid, out); }},
      {c_land, &land_common.config, [&] { return run_landscape(land_common, land_grid, out); }},
      {c_descend, &descend.common.config, [&] { return run_descend(descend, out); }},
      {c_conj, &conj.common.config, [&] { return run_conjecture(conj, out); }},
      {c_sep, &sep.common.config, [&] { return run_gaussian_sep(sep, out); }},
      {c_growth, &growth.common.config, [&] { return run_growth(growth, out); }},
      {t42, &tilt.ex42.config, [&] { return run_tilt_ex42(tilt, out); }},
      {t43, &tilt.ex43.config, [&] { return run_tilt_ex43(tilt, out); }},
      {t41, &tilt.ex41.config, [&] { return run_tilt_ex41(tilt, out); }},
      {tsample, &tilt.sample.config, [&] { return run_tilt_sample(tilt, out); }},
  };

  try {
    for (const Leaf& leaf : leaves) {
      if (!leaf.app->parsed()) continue;
      apply_config(leaf.app, *leaf.config);
      return leaf.body();
    }
    err << "error: no command given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Inconsistent& e) {
    err << "error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    // Invalid arguments and dimension mismatches derive from logic_error too.
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr ||
        dynamic_cast<const std::domain_error*>(&e) != nullptr) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
}

}  // namespace l1landscape::cli
