#include "douglas/energy.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "douglas/errors.hpp"
#include "douglas/special_functions.hpp"

namespace douglas {

double energy_spectral(const SpectralCoefficients& coeffs) {
  double s = 0.0;
  for (const auto& [kj, b] : coeffs.values)
    if (kj.first >= 1) s += kj.first * b * b;
  return s;
}

double energy_gradient_volume(const SpectralCoefficients& coeffs, const BallRule& rule) {
  if (rule.n != coeffs.n) throw std::invalid_argument("energy_gradient_volume: dimension mismatch");
  return integrate_ball(rule, [&](std::span<const double> x) {
    BallPoint p;
    p.coords.assign(x.begin(), x.end());
    auto g = gradient_extension(coeffs, p);
    double s = 0.0;
    for (double gi : g) s += gi * gi;
    return s;
  });
}

double energy_boundary_flux(const SpectralCoefficients& coeffs, const QuadratureRule& rule,
                            double r) {
  if (rule.n != coeffs.n) throw std::invalid_argument("energy_boundary_flux: dimension mismatch");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("energy_boundary_flux: need r in [0, 1]");
  const int n = coeffs.n;
  std::vector<double> terms(rule.size());
  std::vector<double> by_degree(std::size_t(coeffs.K) + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    // Value of each degree component at the node.
    std::fill(by_degree.begin(), by_degree.end(), 0.0);
    for (const auto& [kj, b] : coeffs.values) {
      if (b == 0.0) continue;
      const auto& basis = harmonic_basis(n, kj.first);
      by_degree[std::size_t(kj.first)] += b * basis[std::size_t(kj.second - 1)].eval(rule.nodes[i].coords);
    }
    double U = 0.0;
    double dU = 0.0;
    for (int k = 0; k <= coeffs.K; ++k) {
      double rk = (k == 0) ? 1.0 : std::pow(r, k);
      U += rk * by_degree[std::size_t(k)];
      if (k >= 1) dU += k * ((k == 1) ? 1.0 : std::pow(r, k - 1)) * by_degree[std::size_t(k)];
    }
    terms[i] = rule.weights[i] * U * dU * std::pow(r, n - 1);
  }
  return pairwise_sum(terms);
}

namespace {

struct FlatGrid {
  int n;
  std::size_t count;
  std::vector<double> coords;  // count * n, row-major
  std::vector<double> weights;
  std::vector<double> uvals;
};

FlatGrid flatten(const QuadratureRule& rule, const BoundaryFunction& u) {
  FlatGrid g;
  g.n = rule.n;
  g.count = rule.size();
  g.coords.resize(g.count * std::size_t(rule.n));
  g.weights = rule.weights;
  g.uvals.resize(g.count);
  for (std::size_t i = 0; i < g.count; ++i) {
    for (int d = 0; d < rule.n; ++d)
      g.coords[i * std::size_t(rule.n) + std::size_t(d)] = rule.nodes[i].coords[std::size_t(d)];
    double v = u.evaluator(rule.nodes[i]);
    if (!std::isfinite(v))
      throw EvaluationError("energy_double_integral: boundary function non-finite",
                            rule.nodes[i].coords, i);
    g.uvals[i] = v;
  }
  return g;
}

double double_sum_offset(const FlatGrid& a, const FlatGrid& b, int n) {
  std::vector<double> row_sums(a.count);
  std::vector<double> row(b.count);
  const double half_n = 0.5 * n;
  for (std::size_t i = 0; i < a.count; ++i) {
    const double* xi = &a.coords[i * std::size_t(n)];
    for (std::size_t j = 0; j < b.count; ++j) {
      const double* yj = &b.coords[j * std::size_t(n)];
      double dot = 0.0;
      for (int d = 0; d < n; ++d) dot += xi[d] * yj[d];
      double dist2 = 2.0 - 2.0 * dot;
      if (dist2 <= 1e-24) {
        std::ostringstream os;
        os << "energy_double_integral: coincident nodes (" << i << ", " << j << ")";
        throw ConfigError(os.str());
      }
      double diff = a.uvals[i] - b.uvals[j];
      row[j] = b.weights[j] * diff * diff / std::pow(dist2, half_n);
    }
    row_sums[i] = a.weights[i] * pairwise_sum(row);
  }
  return pairwise_sum(row_sums);
}

double double_sum_abel(const FlatGrid& a, int n, double r) {
  std::vector<double> row_sums(a.count);
  std::vector<double> row(a.count);
  const double rn = std::pow(r, n);
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double r6 = r4 * r2;
  const double expo = 0.5 * n + 1.0;
  for (std::size_t i = 0; i < a.count; ++i) {
    const double* xi = &a.coords[i * std::size_t(n)];
    for (std::size_t j = 0; j < a.count; ++j) {
      double diff = a.uvals[i] - a.uvals[j];
      if (diff == 0.0) {
        row[j] = 0.0;
        continue;
      }
      const double* yj = &a.coords[j * std::size_t(n)];
      double t = 0.0;
      for (int d = 0; d < n; ++d) t += xi[d] * yj[d];
      double num = n * t - (n - 4.0) * t * r4 - (n + 2.0) * r2 + (n - 2.0) * r6;
      double J = -rn * num / std::pow(1.0 - 2.0 * t * r2 + r4, expo);
      row[j] = a.weights[j] * diff * diff * J;
    }
    row_sums[i] = a.weights[i] * pairwise_sum(row);
  }
  return pairwise_sum(row_sums);
}

}  // namespace

double energy_double_integral(const BoundaryFunction& u, DoubleIntegralMode mode,
                              const DoubleIntegralParams& params) {
  const int n = u.n;
  QuadratureRule base = product_rule(n, params.level);
  FlatGrid a = flatten(base, u);
  const double omega = surface_area(n);

  if (mode == DoubleIntegralMode::offset_grids) {
    QuadratureRule offset = rotated_rule(base, golden_angle(), 0, 1);
    FlatGrid b = flatten(offset, u);
    return double_sum_offset(a, b, n) / omega;
  }

  if (params.abel.size() < 2)
    throw std::invalid_argument("energy_double_integral: abel mode needs >= 2 radii");
  std::vector<double> radii = params.abel;
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("energy_double_integral: abel radii must lie in (0, 1)");
  std::vector<double> vals(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i)
    vals[i] = double_sum_abel(a, n, radii[i]) / (2.0 * omega);
  // Error model ~ C (1-r): extrapolate linearly from the two largest radii.
  double d1 = 1.0 - radii[radii.size() - 2];
  double d2 = 1.0 - radii[radii.size() - 1];
  double v1 = vals[vals.size() - 2];
  double v2 = vals[vals.size() - 1];
  return (v2 * d1 - v1 * d2) / (d1 - d2);
}

double energy_dbar_volume(const MonogenicField& F, const BallRule& rule) {
  if (rule.n != F.n) throw std::invalid_argument("energy_dbar_volume: dimension mismatch");
  auto norm2_at = [&](std::span<const double> x, double shrink,
                      const std::function<Multivector(const BallPoint&)>& deriv) {
    BallPoint p;
    p.coords.assign(x.begin(), x.end());
    if (shrink != 1.0)
      for (double& c : p.coords) c *= shrink;
    Multivector d = deriv(p);
    double s = 0.0;
    for (double c : d.coeffs()) s += c * c;
    return s;
  };

  if (F.dbar) {
    return integrate_ball(rule, [&](std::span<const double> x) { return norm2_at(x, 1.0, F.dbar); });
  }
  // Finite differences need clearance: integrate over B(rho) for two shrink
  // factors and extrapolate linearly in (1 - rho).
  const double step = 1e-4;
  auto fd = [&](const BallPoint& p) { return dirac_apply(F, p, step).DbarF; };
  const double rho1 = 0.985;
  const double rho2 = 0.995;
  auto value_at = [&](double rho) {
    double v = integrate_ball(rule, [&](std::span<const double> x) { return norm2_at(x, rho, fd); });
    return v * std::pow(rho, F.n);  // change of variables onto B(rho)
  };
  double v1 = value_at(rho1);
  double v2 = value_at(rho2);
  double d1 = 1.0 - rho1;
  double d2 = 1.0 - rho2;
  return (v2 * d1 - v1 * d2) / (d1 - d2);
}

StokesResult energy_stokes_boundary(const MonogenicField& F, const QuadratureRule& rule, double r) {
  if (rule.n != F.n) throw std::invalid_argument("energy_stokes_boundary: dimension mismatch");
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("energy_stokes_boundary: need r in (0, 1]");
  const bool analytic = bool(F.dbar);
  if (!analytic && r > 1.0 - 2e-3)
    throw std::invalid_argument(
        "energy_stokes_boundary: r too close to 1 for finite-difference derivatives");
  const double step = 1e-4;
  const double rpow = std::pow(r, F.n - 1);
  const std::size_t nblades = std::size_t(1) << F.m;
  std::vector<std::vector<double>> blade_terms(nblades, std::vector<double>(rule.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    BallPoint x;
    x.coords = rule.nodes[i].coords;
    for (double& c : x.coords) c *= r;
    Multivector Fv = F.eval(x);
    Multivector dF = analytic ? F.dbar(x) : dirac_apply(F, x, step).DbarF;
    BallPoint nu_pt;
    nu_pt.coords = rule.nodes[i].coords;
    Multivector nu = embed_point(nu_pt, F.m, F.axis_blades);
    Multivector integrand = mv_mul(mv_mul(mv_conj(Fv), nu), dF);
    for (std::uint32_t blade = 0; blade < nblades; ++blade)
      blade_terms[blade][i] = rule.weights[i] * rpow * integrand[blade];
  }
  double value = 0.5 * pairwise_sum(blade_terms[0]);
  double residue2 = 0.0;
  for (std::uint32_t blade = 1; blade < nblades; ++blade) {
    double c = 0.5 * pairwise_sum(blade_terms[blade]);
    residue2 += c * c;
  }
  return {value, std::sqrt(residue2)};
}

std::vector<std::string> default_forms(int n) {
  std::vector<std::string> forms = {"spectral", "gradient_volume", "boundary_flux",
                                    "double_integral"};
  if (n >= 3) {
    forms.push_back("dbar_volume");
    forms.push_back("stokes_boundary");
  }
  if (n == 4) {
    forms.push_back("dbar_volume_quat");
    forms.push_back("stokes_boundary_quat");
  }
  return forms;
}

int default_double_integral_level(int n) {
  switch (n) {
    case 2: return 128;
    case 3: return 40;
    case 4: return 14;
    default: return 8;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

void run_form(EnergyReport& report, const std::string& name, const std::function<double()>& fn) {
  auto t0 = Clock::now();
  try {
    double v = fn();
    if (!std::isfinite(v)) throw std::runtime_error("non-finite form value");
    report.forms[name] = v;
  } catch (const std::exception& e) {
    report.form_errors[name] = e.what();
  }
  report.timings[name] = std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

EnergyReport energy_report(const BoundaryFunction& u, const ReportConfig& config) {
  EnergyReport report;
  report.n = u.n;
  report.label = u.label;
  report.config = config;
  const int n = u.n;
  const int level = config.level > 0 ? config.level : default_double_integral_level(n);
  report.levels_used = level;

  std::set<std::string> requested = config.forms;
  if (requested.empty()) {
    auto all = default_forms(n);
    requested.insert(all.begin(), all.end());
  }
  auto wants = [&](const std::string& f) { return requested.count(f) > 0; };

  // Spectral data: the input's own spectrum when band-limited, otherwise each
  // consumer projects independently (identical deterministic computation).
  const int K = u.exact_spectrum ? u.exact_spectrum->K : config.K;
  auto spectrum = [&]() -> SpectralCoefficients {
    if (u.exact_spectrum) return *u.exact_spectrum;
    return project(u, K, product_rule_for_degree(n, 2 * K));
  };
  const bool band_limited = bool(u.exact_spectrum);

  if (wants("spectral"))
    run_form(report, "spectral", [&] { return energy_spectral(spectrum()); });

  if (wants("gradient_volume"))
    run_form(report, "gradient_volume", [&] {
      auto coeffs = spectrum();
      BallRule rule = ball_rule(n, coeffs.K + n, std::max(1, coeffs.K));
      return energy_gradient_volume(coeffs, rule);
    });

  if (wants("boundary_flux"))
    run_form(report, "boundary_flux", [&] {
      auto coeffs = spectrum();
      QuadratureRule rule = product_rule_for_degree(n, 2 * coeffs.K);
      if (band_limited) return energy_boundary_flux(coeffs, rule, 1.0);
      // Abel sweep with a divergence diagnostic.
      std::vector<double> vals;
      for (double r : config.abel) {
        double v = energy_boundary_flux(coeffs, rule, r);
        if (std::abs(v) > config.flux_divergence_cap) {
          report.notes.push_back("boundary_flux: diverging along the Abel radius sweep");
          throw std::runtime_error("boundary_flux exceeded the divergence cap");
        }
        vals.push_back(v);
      }
      double d1 = 1.0 - config.abel[config.abel.size() - 2];
      double d2 = 1.0 - config.abel[config.abel.size() - 1];
      double v1 = vals[vals.size() - 2];
      double v2 = vals[vals.size() - 1];
      return (v2 * d1 - v1 * d2) / (d1 - d2);
    });

  if (wants("double_integral"))
    run_form(report, "double_integral", [&] {
      DoubleIntegralParams p;
      p.level = level;
      p.abel = config.abel;
      return energy_double_integral(u, config.di_mode, p);
    });

  auto hyper_form = [&](HyperAlgebra algebra, bool stokes) {
    auto coeffs = spectrum();
    MonogenicField F = lemma_extension_field(coeffs, algebra);
    if (stokes) {
      QuadratureRule rule = product_rule_for_degree(n, 2 * coeffs.K + 2);
      auto res = energy_stokes_boundary(F, rule, 1.0);
      std::string key = (algebra == HyperAlgebra::quaternion) ? "stokes_boundary_quat_nonscalar"
                                                              : "stokes_boundary_nonscalar";
      report.residues[key] = res.nonscalar_residue;
      return res.value;
    }
    BallRule rule = ball_rule(n, coeffs.K + n, std::max(1, coeffs.K));
    return energy_dbar_volume(F, rule);
  };

  if (n >= 3) {
    if (wants("dbar_volume"))
      run_form(report, "dbar_volume", [&] { return hyper_form(HyperAlgebra::clifford, false); });
    if (wants("stokes_boundary"))
      run_form(report, "stokes_boundary", [&] { return hyper_form(HyperAlgebra::clifford, true); });
    if (n == 4) {
      if (wants("dbar_volume_quat"))
        run_form(report, "dbar_volume_quat",
                 [&] { return hyper_form(HyperAlgebra::quaternion, false); });
      if (wants("stokes_boundary_quat"))
        run_form(report, "stokes_boundary_quat",
                 [&] { return hyper_form(HyperAlgebra::quaternion, true); });
    }
  }

  for (auto a = report.forms.begin(); a != report.forms.end(); ++a)
    for (auto b = std::next(a); b != report.forms.end(); ++b) {
      double abs_dev = std::abs(a->second - b->second);
      double scale = std::max({std::abs(a->second), std::abs(b->second), 1e-300});
      report.deviations[a->first + "|" + b->first] = {abs_dev, abs_dev / scale};
    }
  return report;
}

}  // namespace douglas
