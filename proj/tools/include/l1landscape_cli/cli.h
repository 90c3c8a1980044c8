#ifndef L1LANDSCAPE_CLI_CLI_H_
#define L1LANDSCAPE_CLI_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "l1landscape/dynamics.h"
#include "l1landscape/linalg.h"

namespace l1landscape::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitNumerical = 3;

// Runs one invocation. `args` excludes the program name. Results go to `out`
// unless -o/--out names a file; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Comma-separated reals, e.g. "-1,0.5,2". Throws std::invalid_argument.
Vector parse_vector(const std::string& text);

// Self-contained SVG of the normalized negative midpoint-subgradient field,
// the spurious segment and the two ground truths. viewBox is in problem
// coordinates with y flipped so that up is +y.
std::string flow_svg(std::span<const double> ustar, const FlowGrid& grid);

}  // namespace l1landscape::cli

#endif  // L1LANDSCAPE_CLI_CLI_H_
