// Command-line harness: energy reports, convergence sweeps, the invariant
// verification battery, and kernel tables.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "douglas/checks.hpp"
#include "douglas/errors.hpp"
#include "douglas/extension.hpp"
#include "douglas/run.hpp"
#include "douglas/special_functions.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  int n = -1;
  std::string expr;
  std::string modes;
  std::string preset;
  std::string forms;
  int level = -1;
  int K = -1;
  std::string abel;
  std::int64_t seed = -1;
  std::string mode;
  std::string out;
  std::string format;
  double fail_over = -1.0;
  bool no_timings = false;
  std::string levels;  // converge sweep
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string field;
  while (std::getline(is, field, sep))
    if (!field.empty()) out.push_back(field);
  return out;
}

// "k,j,c;k,j,c;..."
std::vector<std::tuple<int, int, double>> parse_modes(const std::string& s) {
  std::vector<std::tuple<int, int, double>> out;
  for (const auto& entry : split(s, ';')) {
    auto parts = split(entry, ',');
    if (parts.size() != 3)
      throw douglas::ConfigError("--modes entries must look like k,j,coeff");
    out.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]), std::stod(parts[2]));
  }
  return out;
}

douglas::RunConfig assemble(const CliOverrides& cli) {
  douglas::RunConfig config;
  if (!cli.config_path.empty()) {
    std::ifstream is(cli.config_path);
    if (!is) throw douglas::ConfigError("cannot read config file: " + cli.config_path);
    std::stringstream buf;
    buf << is.rdbuf();
    config = douglas::parse_run_config_json(buf.str());
  }
  if (cli.n > 0) config.n = cli.n;
  if (!cli.expr.empty()) {
    config.expr = cli.expr;
    config.modes.clear();
    config.preset.clear();
  }
  if (!cli.modes.empty()) {
    config.modes = parse_modes(cli.modes);
    config.expr.clear();
    config.preset.clear();
  }
  if (!cli.preset.empty()) {
    config.preset = cli.preset;
    config.expr.clear();
    config.modes.clear();
  }
  if (!cli.forms.empty()) config.forms = split(cli.forms, ',');
  if (cli.level > 0) config.level = cli.level;
  if (cli.K >= 0) config.K = cli.K;
  if (!cli.abel.empty()) {
    config.abel.clear();
    for (const auto& r : split(cli.abel, ',')) config.abel.push_back(std::stod(r));
  }
  if (cli.seed >= 0) config.seed = std::uint64_t(cli.seed);
  if (!cli.mode.empty()) config.double_integral_mode = cli.mode;
  if (!cli.out.empty()) config.out = cli.out;
  if (!cli.format.empty()) config.format = cli.format;
  if (cli.fail_over >= 0.0) config.fail_over = cli.fail_over;
  if (cli.no_timings) config.include_timings = false;
  if (!cli.levels.empty()) {
    config.sweep_levels.clear();
    for (const auto& l : split(cli.levels, ',')) config.sweep_levels.push_back(std::stoi(l));
  }
  return config;
}

void add_common_flags(CLI::App* cmd, CliOverrides& cli) {
  cmd->add_option("--config", cli.config_path, "JSON config file (flags override)");
  cmd->add_option("--n", cli.n, "ambient dimension (sphere is S^{n-1})");
  cmd->add_option("--expr", cli.expr, "boundary function expression, e.g. 'x0^2 - x1*x2'");
  cmd->add_option("--modes", cli.modes, "band-limited modes 'k,j,c;k,j,c;...'");
  cmd->add_option("--preset", cli.preset, "named boundary preset (constant|coordinate|quadratic)");
  cmd->add_option("--forms", cli.forms, "comma-separated energy forms to run");
  cmd->add_option("--level", cli.level, "double-integral quadrature level");
  cmd->add_option("--K", cli.K, "spectral truncation degree for expression input");
  cmd->add_option("--abel", cli.abel, "Abel radius sequence 'r1,r2,...'");
  cmd->add_option("--seed", cli.seed, "seed recorded in the report");
  cmd->add_option("--mode", cli.mode, "double integral mode: offset_grids|abel_j");
  cmd->add_option("--out", cli.out, "output path (default stdout)");
  cmd->add_option("--format", cli.format, "json|csv");
  cmd->add_option("--fail-over", cli.fail_over,
                  "exit nonzero when any form deviates from spectral beyond this relative tolerance");
  cmd->add_flag("--no-timings", cli.no_timings, "omit wall-clock timings (byte-stable output)");
}

int run_verify(std::uint64_t seed) {
  auto results = douglas::run_verification_suite(seed);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-32s measured=%.3e bound=%.3e %s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.measured, r.bound, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu checks passed\n", int(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}

int run_kernels(int n, double r, int K, int count, const std::string& out_path) {
  using namespace douglas;
  if (n < 3) throw ConfigError("kernels: requires n >= 3");
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("kernels: requires 0 < r < 1");
  std::ostringstream os;
  os << "theta,t,poisson,poisson_abel,conj_norm,conj_abel_norm,schwarz_scalar\n";
  SpherePoint xi;
  xi.coords.assign(std::size_t(n), 0.0);
  xi.coords[0] = 1.0;
  char buf[40];
  for (int i = 1; i < count; ++i) {
    double theta = M_PI * i / count;
    SpherePoint eta = xi;
    eta.coords[0] = std::cos(theta);
    eta.coords[1] = std::sin(theta);
    double p = poisson_kernel(n, r, xi, eta);
    Multivector q = conjugate_poisson_kernel(n, r, xi, eta);
    Multivector s = schwarz_kernel(n, r, xi, eta);
    auto sums = abel_kernel_sums(n, r, xi, eta, K);
    auto emit = [&](double v, char tail) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      os << buf << tail;
    };
    emit(theta, ',');
    emit(std::cos(theta), ',');
    emit(p, ',');
    emit(sums.phat, ',');
    emit(mv_norm(q), ',');
    emit(mv_norm(sums.qhat), ',');
    emit(mv_scalar(s), '\n');
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + out_path);
    f << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Douglas energy of boundary data on S^{n-1}: "
               "five independent computations and their cross-validation"};
  app.require_subcommand(1);

  CliOverrides cli;
  auto* energy = app.add_subcommand("energy", "compute an energy report for one boundary function");
  add_common_flags(energy, cli);
  auto* converge = app.add_subcommand("converge", "sweep quadrature levels and tabulate deviations");
  add_common_flags(converge, cli);
  converge->add_option("--levels", cli.levels, "comma-separated sweep levels")->required();

  std::int64_t verify_seed = 7;
  auto* verify = app.add_subcommand("verify", "run the invariant verification battery");
  verify->add_option("--seed", verify_seed, "seed for the randomized checks");

  int kn = 3;
  double kr = 0.5;
  int kK = 80;
  int kcount = 64;
  std::string kout;
  auto* kernels = app.add_subcommand("kernels", "tabulate Poisson/conjugate/Schwarz kernels");
  kernels->add_option("--n", kn, "ambient dimension (>= 3)");
  kernels->add_option("--r", kr, "radius in (0, 1)");
  kernels->add_option("--K", kK, "Abel partial-sum truncation");
  kernels->add_option("--count", kcount, "number of theta samples");
  kernels->add_option("--out", kout, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(energy)) return douglas::run_energy(assemble(cli));
    if (app.got_subcommand(converge)) return douglas::run_converge(assemble(cli));
    if (app.got_subcommand(verify)) return run_verify(std::uint64_t(verify_seed));
    if (app.got_subcommand(kernels)) return run_kernels(kn, kr, kK, kcount, kout);
  } catch (const douglas::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const douglas::ParseError& e) {
    std::cerr << "parse error at byte " << e.offset() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
