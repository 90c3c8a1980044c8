#include <algorithm>
#include <cmath>
#include <sstream>

#include "l1landscape/format.h"
#include "l1landscape_cli/cli.h"

namespace l1landscape::cli {
namespace {

std::string num(double v) { return format_double(v); }

double cell(double lo, double hi, std::size_t count) {
  return count > 1 ? (hi - lo) / static_cast<double>(count - 1) : (hi - lo);
}

}  // namespace

std::string flow_svg(std::span<const double> ustar, const FlowGrid& grid) {
  const std::vector<FlowSample> field = flow_field(ustar, grid);

  const double w = grid.xmax - grid.xmin;
  const double h = grid.ymax - grid.ymin;
  const double pad = 0.05 * std::max(w, h);
  const double step = std::min(cell(grid.xmin, grid.xmax, grid.nx),
                               cell(grid.ymin, grid.ymax, grid.ny));
  const double len = 0.4 * (step > 0.0 ? step : 1.0);
  const double stroke = len * 0.08;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(grid.xmin - pad) << ' '
     << num(-grid.ymax - pad) << ' ' << num(w + 2 * pad) << ' ' << num(h + 2 * pad)
     << "\" width=\"600\" height=\"600\">\n";
  os << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
        "markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L10,5 L0,10 z\" style=\"fill:#333\"/></marker></defs>\n";
  os << "<rect x=\"" << num(grid.xmin - pad) << "\" y=\"" << num(-grid.ymax - pad)
     << "\" width=\"" << num(w + 2 * pad) << "\" height=\"" << num(h + 2 * pad)
     << "\" style=\"fill:#ffffff\"/>\n";

  // Spurious stationary points: {s1 u1 + s2 u2 = 0, |u_i| <= |u*_i|}.
  const double m = (ustar[0] != 0.0 && ustar[1] != 0.0)
                       ? std::min(std::abs(ustar[0]), std::abs(ustar[1]))
                       : 0.0;
  const double s1 = ustar[0] >= 0.0 ? 1.0 : -1.0;
  const double s2 = ustar[1] >= 0.0 ? 1.0 : -1.0;
  os << "<line class=\"spurious\" x1=\"" << num(-s1 * m) << "\" y1=\"" << num(-(s2 * m))
     << "\" x2=\"" << num(s1 * m) << "\" y2=\"" << num(-(-s2 * m)) << "\" style=\"stroke:#c0392b;stroke-width:"
     << num(4 * stroke) << ";stroke-linecap:round\"/>\n";

  for (double sign : {1.0, -1.0}) {
    os << "<circle class=\"ground-truth\" cx=\"" << num(sign * ustar[0]) << "\" cy=\""
       << num(-sign * ustar[1]) << "\" r=\"" << num(3 * stroke)
       << "\" style=\"fill:#2471a3\"/>\n";
  }

  for (const FlowSample& s : field) {
    const double x0 = s.point[0] - 0.5 * len * s.direction[0];
    const double y0 = s.point[1] - 0.5 * len * s.direction[1];
    const double x1 = s.point[0] + 0.5 * len * s.direction[0];
    const double y1 = s.point[1] + 0.5 * len * s.direction[1];
    os << "<line class=\"arrow\" x1=\"" << num(x0) << "\" y1=\"" << num(-y0) << "\" x2=\""
       << num(x1) << "\" y2=\"" << num(-y1) << "\" style=\"stroke:#333;stroke-width:"
       << num(stroke) << "\" marker-end=\"url(#head)\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace l1landscape::cli
