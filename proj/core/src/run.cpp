#include "douglas/run.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "douglas/errors.hpp"
#include "douglas/expr.hpp"
#include "douglas/report_io.hpp"
#include "douglas/special_functions.hpp"

namespace douglas {

RunConfig parse_run_config_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunConfig c;
  if (j.contains("n")) c.n = j.at("n").get<int>();
  if (j.contains("boundary")) {
    const auto& b = j.at("boundary");
    if (b.contains("expr")) c.expr = b.at("expr").get<std::string>();
    if (b.contains("preset")) c.preset = b.at("preset").get<std::string>();
    if (b.contains("modes"))
      for (const auto& m : b.at("modes"))
        c.modes.emplace_back(m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<double>());
  }
  if (j.contains("forms")) c.forms = j.at("forms").get<std::vector<std::string>>();
  if (j.contains("level")) c.level = j.at("level").get<int>();
  if (j.contains("K")) c.K = j.at("K").get<int>();
  if (j.contains("abel")) c.abel = j.at("abel").get<std::vector<double>>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("double_integral_mode"))
    c.double_integral_mode = j.at("double_integral_mode").get<std::string>();
  if (j.contains("out")) c.out = j.at("out").get<std::string>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (j.contains("fail_over")) c.fail_over = j.at("fail_over").get<double>();
  if (j.contains("include_timings")) c.include_timings = j.at("include_timings").get<bool>();
  if (j.contains("sweep_levels")) c.sweep_levels = j.at("sweep_levels").get<std::vector<int>>();
  return c;
}

namespace {

BoundaryFunction preset_boundary(const std::string& name, int n) {
  if (name == "constant") {
    SpectralCoefficients coeffs;
    coeffs.n = n;
    coeffs.set(0, 1, std::sqrt(surface_area(n)));
    return boundary_from_spectrum(std::move(coeffs), "constant");
  }
  auto projected = [&](const std::string& expr, int K, const std::string& label) {
    BoundaryFunction raw = boundary_from_expression(expr, n);
    SpectralCoefficients coeffs = project(raw, K, product_rule_for_degree(n, 2 * K));
    // Drop quadrature dust so the spectrum is exactly band-limited.
    for (auto it = coeffs.values.begin(); it != coeffs.values.end();)
      it = (std::abs(it->second) < 1e-12) ? coeffs.values.erase(it) : std::next(it);
    BoundaryFunction u = boundary_from_spectrum(std::move(coeffs), label);
    return u;
  };
  if (name == "coordinate") return projected("x0", 1, "coordinate");
  if (name == "quadratic") return projected("x0^2 - x1^2", 2, "quadratic");
  throw ConfigError("unknown preset '" + name + "' (known: constant, coordinate, quadratic)");
}

}  // namespace

BoundaryFunction make_boundary(const RunConfig& config) {
  int specs = int(!config.expr.empty()) + int(!config.modes.empty()) + int(!config.preset.empty());
  if (specs != 1)
    throw ConfigError("exactly one boundary spec required (expr, modes, or preset)");
  if (!config.expr.empty()) return boundary_from_expression(config.expr, config.n);
  if (!config.modes.empty()) return boundary_from_modes(config.n, config.modes);
  return preset_boundary(config.preset, config.n);
}

ReportConfig to_report_config(const RunConfig& config) {
  ReportConfig rc;
  rc.forms.insert(config.forms.begin(), config.forms.end());
  rc.K = config.K;
  rc.level = config.level;
  rc.abel = config.abel;
  rc.seed = config.seed;
  if (config.double_integral_mode == "abel_j") rc.di_mode = DoubleIntegralMode::abel_j;
  else if (config.double_integral_mode == "offset_grids") rc.di_mode = DoubleIntegralMode::offset_grids;
  else throw ConfigError("double_integral_mode must be offset_grids or abel_j");
  return rc;
}

namespace {

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << payload;
}

// Threshold gate: nonzero status iff a requested tolerance is violated.
int gate_status(const EnergyReport& report, double fail_over) {
  if (fail_over < 0.0) return 0;
  if (!report.form_errors.empty()) return 1;
  for (const auto& [pair, dev] : report.deviations) {
    if (pair.find("spectral") == std::string::npos) continue;
    if (dev.rel > fail_over) return 1;
  }
  return 0;
}

}  // namespace

int run_energy(const RunConfig& config) {
  BoundaryFunction u = make_boundary(config);
  EnergyReport report = energy_report(u, to_report_config(config));
  ReportFormat fmt = (config.format == "csv") ? ReportFormat::csv : ReportFormat::json;
  write_output(config.out, emit_report(report, fmt, config.include_timings));
  return gate_status(report, config.fail_over);
}

int run_converge(const RunConfig& config) {
  if (config.sweep_levels.empty())
    throw ConfigError("converge: need at least one sweep level");
  BoundaryFunction u = make_boundary(config);

  std::ostringstream os;
  os << "level,form,value,abs_dev_vs_spectral,rel_dev_vs_spectral\n";
  char buf[40];
  int status = 0;
  for (int level : config.sweep_levels) {
    RunConfig leveled = config;
    leveled.level = level;
    EnergyReport report = energy_report(u, to_report_config(leveled));
    for (const auto& [form, value] : report.forms) {
      double abs_dev = 0.0;
      double rel_dev = 0.0;
      auto it = report.deviations.find(form + "|spectral");
      if (it == report.deviations.end()) it = report.deviations.find("spectral|" + form);
      if (it != report.deviations.end()) {
        abs_dev = it->second.abs;
        rel_dev = it->second.rel;
      }
      os << level << "," << form << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", value);
      os << buf << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", abs_dev);
      os << buf << ",";
      std::snprintf(buf, sizeof(buf), "%.17g", rel_dev);
      os << buf << "\n";
    }
    if (level == config.sweep_levels.back()) status = gate_status(report, config.fail_over);
  }
  write_output(config.out, os.str());
  return status;
}

}  // namespace douglas
