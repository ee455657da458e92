#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "douglas/energy.hpp"
#include "douglas/harmonics.hpp"

namespace douglas {

// One run of the harness: boundary spec, requested forms, discretization
// knobs, output destination. Mirrors the JSON config file field-for-field;
// CLI flags override file values.
struct RunConfig {
  int n = 3;
  std::string expr;                                    // expression boundary spec
  std::vector<std::tuple<int, int, double>> modes;     // explicit (k, j, coeff)
  std::string preset;                                  // named preset
  std::vector<std::string> forms;                      // empty = all for n
  int level = 0;                                       // 0 = per-dimension default
  int K = 8;
  std::vector<double> abel = {0.90, 0.95, 0.975, 0.9875};
  std::uint64_t seed = 0;
  std::string double_integral_mode = "offset_grids";
  std::string out;                                     // empty = stdout
  std::string format = "json";
  double fail_over = -1.0;                             // <0 disables the threshold gate
  bool include_timings = true;
  std::vector<int> sweep_levels;                       // converge runs
};

RunConfig parse_run_config_json(const std::string& text);

// Presets: constant (u = 1), coordinate (u = x0, cos t at n = 2),
// quadratic (u = x0^2 - x1^2).
BoundaryFunction make_boundary(const RunConfig& config);

ReportConfig to_report_config(const RunConfig& config);

// Exit status 0 on success; 1 when the fail-over threshold is violated (or a
// requested form failed while the gate is active); 2 on configuration errors.
int run_energy(const RunConfig& config);
int run_converge(const RunConfig& config);

}  // namespace douglas
