#include "douglas/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "douglas/clifford.hpp"
#include "douglas/energy.hpp"
#include "douglas/extension.hpp"
#include "douglas/harmonics.hpp"
#include "douglas/quadrature.hpp"
#include "douglas/special_functions.hpp"

namespace douglas {

namespace {

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

SpherePoint random_unit(std::mt19937_64& rng, int n) {
  SpherePoint p;
  p.coords.resize(std::size_t(n));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (int d = 0; d < n; ++d) {
      double u1 = uniform01(rng);
      while (u1 <= 0.0) u1 = uniform01(rng);
      double u2 = uniform01(rng);
      p.coords[std::size_t(d)] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
      norm += p.coords[std::size_t(d)] * p.coords[std::size_t(d)];
    }
    norm = std::sqrt(norm);
  } while (norm < 1e-8);
  for (double& c : p.coords) c /= norm;
  return p;
}

BallPoint random_ball(std::mt19937_64& rng, int n, double rmax) {
  SpherePoint dir = random_unit(rng, n);
  double r = rmax * std::pow(uniform01(rng), 1.0 / n);
  BallPoint p;
  p.coords = dir.coords;
  for (double& c : p.coords) c *= r;
  return p;
}

SpectralCoefficients random_spectrum(int n, int K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SpectralCoefficients coeffs;
  coeffs.n = n;
  for (int k = 0; k <= K; ++k) {
    auto dim = dim_harmonics(n, k);
    for (int j = 1; j <= dim; ++j) coeffs.set(k, j, 2.0 * uniform01(rng) - 1.0);
  }
  return coeffs;
}

void push(std::vector<CheckResult>& out, const std::string& name, double measured, double bound,
          const std::string& detail = "") {
  out.push_back({name, measured <= bound, measured, bound, detail});
}

double gegenbauer_coeff_at_one(int n, int k) {
  // Gamma(n+k-2) / (k! Gamma(n-2)) = C_k^{(n-2)/2}(1)
  return std::exp(std::lgamma(double(n + k - 2)) - std::lgamma(double(k + 1)) -
                  std::lgamma(double(n - 2)));
}

}  // namespace

std::vector<CheckResult> check_special_functions() {
  std::vector<CheckResult> out;

  // Generating function: sum_k [Gamma(n+k-2)/(k! Gamma(n-2))] x^k P_k^n(t)
  // = (1 - 2tx + x^2)^{-(n-2)/2}
  for (int n : {3, 4, 5}) {
    double worst = 0.0;
    for (double x : {0.3, 0.6}) {
      for (int ti = 0; ti <= 20; ++ti) {
        double t = -0.95 + 0.095 * ti;
        double sum = 0.0;
        for (int k = 0; k <= 300; ++k)
          sum += gegenbauer_coeff_at_one(n, k) * std::pow(x, k) * legendre_pkn(n, k, t);
        double closed = std::pow(1.0 - 2.0 * t * x + x * x, -0.5 * (n - 2));
        worst = std::max(worst, std::abs(sum - closed));
      }
    }
    push(out, "generating_function_n" + std::to_string(n), worst, 1e-9);
  }

  {  // n = 2 log form: sum_k x^k P_k^2(t)/k = -(1/2) ln(1 - 2xt + x^2)
    double worst = 0.0;
    double x = 0.5;
    for (int ti = 0; ti <= 20; ++ti) {
      double t = -0.95 + 0.095 * ti;
      double sum = 0.0;
      for (int k = 1; k <= 500; ++k) sum += std::pow(x, k) * legendre_pkn(2, k, t) / k;
      worst = std::max(worst, std::abs(sum + 0.5 * std::log(1.0 - 2.0 * x * t + x * x)));
    }
    push(out, "log_identity_n2", worst, 1e-9);
  }

  for (int n : {2, 3, 4}) {  // truncated series against the closed-form kernel
    double worst = 0.0;
    for (double r : {0.5, 0.7, 0.9})
      for (double t : {-0.4, 0.2, 0.6})
        worst = std::max(worst, std::abs(jseries(n, r, t, 400) - jkernel(n, r, t)));
    push(out, "jseries_vs_jkernel_n" + std::to_string(n), worst, 1e-9);
  }

  for (int n : {2, 3, 4, 5}) {  // |J(r, cos theta)| / J(1, cos theta) <= n-1
    double worst = 0.0;
    for (int ri = 0; ri < 20; ++ri) {
      double r = 0.5 + (0.999 - 0.5) * ri / 19.0;
      for (int ti = 0; ti < 40; ++ti) {
        double theta = 0.1 + (M_PI - 1e-6 - 0.1) * ti / 39.0;
        double ratio = std::abs(jkernel(n, r, std::cos(theta))) / jkernel(n, 1.0, std::cos(theta));
        worst = std::max(worst, ratio);
      }
    }
    push(out, "jratio_bound_n" + std::to_string(n), worst, double(n - 1) + 1e-12);
  }

  {  // J(1, cos theta) * 2^n sin^n(theta/2) = 2 at theta = pi/2, n = 3
    double theta = 0.5 * M_PI;
    double v = jkernel(3, 1.0, std::cos(theta)) * std::pow(2.0, 3) * std::pow(std::sin(0.5 * theta), 3);
    push(out, "jkernel_boundary_limit", std::abs(v - 2.0), 1e-12);
  }
  return out;
}

std::vector<CheckResult> check_quadrature_and_bases() {
  std::vector<CheckResult> out;
  for (int n = 2; n <= 6; ++n) {
    QuadratureRule rule = product_rule(n, 3);
    double sum = pairwise_sum(rule.weights);
    push(out, "weight_sum_n" + std::to_string(n), std::abs(sum - surface_area(n)), 1e-9);
  }
  for (int n = 2; n <= 4; ++n) {
    BallRule rule = ball_rule(n, 8, 3);
    double sum = pairwise_sum(rule.weights);
    push(out, "ball_volume_n" + std::to_string(n), std::abs(sum - ball_volume(n)), 1e-9);
  }
  for (int n = 2; n <= 5; ++n) {
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k) {
      const auto& basis = harmonic_basis(n, k);
      QuadratureRule rule = product_rule_for_degree(n, 2 * k);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
          double g = integrate(rule, [&](const SpherePoint& p) {
            return basis[a].eval(p.coords) * basis[b].eval(p.coords);
          });
          worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
    }
    push(out, "gram_identity_n" + std::to_string(n), worst, 1e-10);
  }
  {
    bool all = true;
    std::ostringstream detail;
    for (int n = 2; n <= 5; ++n)
      for (int k = 0; k <= 6; ++k) {
        auto got = harmonic_basis(n, k).size();
        auto want = std::size_t(dim_harmonics(n, k));
        if (got != want) {
          all = false;
          detail << "(n=" << n << ",k=" << k << ": " << got << " vs " << want << ") ";
        }
      }
    out.push_back({"dimension_audit", all, all ? 0.0 : 1.0, 0.5, detail.str()});
  }
  return out;
}

std::vector<CheckResult> check_zonal_identities() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(101);
  for (int n : {2, 3, 4}) {
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k)
      for (int rep = 0; rep < 10; ++rep) {
        SpherePoint xi = random_unit(rng, n);
        SpherePoint eta = random_unit(rng, n);
        double lhs = zonal_sum(n, k, xi, eta);
        double rhs = cnk(n, k) * legendre_pkn(n, k, xi.dot(eta));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    push(out, "addition_theorem_n" + std::to_string(n), worst, 1e-10);
  }
  {
    double worst = 0.0;
    int n = 3;
    for (int k = 1; k <= 4; ++k) {
      const auto& basis = harmonic_basis(n, k);
      QuadratureRule rule = product_rule_for_degree(n, 2 * k);
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (int rep = 0; rep < 3; ++rep) {
          SpherePoint xi = random_unit(rng, n);
          double got = funk_hecke_apply(n, k, basis[j], xi, rule);
          worst = std::max(worst, std::abs(got - basis[j].eval(xi.coords)));
        }
    }
    push(out, "funk_hecke_n3", worst, 1e-8);
  }
  push(out, "funk_hecke_k0", std::abs(cnk(3, 0) * surface_area(3) - 1.0), 1e-12);
  return out;
}

std::vector<CheckResult> check_kernels() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(202);

  {  // closed form vs truncated spectral expansion of the Poisson kernel
    double worst = 0.0;
    int n = 3;
    double r = 0.5;
    for (int rep = 0; rep < 10; ++rep) {
      SpherePoint xi = random_unit(rng, n);
      SpherePoint eta = random_unit(rng, n);
      double series = 0.0;
      for (int k = 0; k <= 200; ++k)
        series += std::pow(r, k) * cnk(n, k) * legendre_pkn(n, k, xi.dot(eta));
      worst = std::max(worst, std::abs(series - poisson_kernel(n, r, xi, eta)));
    }
    push(out, "poisson_series_n3", worst, 1e-10);
  }

  {  // unit mass of the closed-form kernel under a product rule
    int n = 4;
    double r = 0.9;
    SpherePoint xi = random_unit(rng, n);
    QuadratureRule rule = product_rule(n, 92);
    double mass = integrate(rule, [&](const SpherePoint& eta) {
      return poisson_kernel(n, r, xi, eta);
    });
    push(out, "poisson_unit_mass_n4", std::abs(mass - 1.0), 1e-8);
  }

  for (int n : {3, 4}) {  // Abel partial sums vs closed-form kernels
    double worst_p = 0.0;
    double worst_q = 0.0;
    double r = 0.5;
    for (int rep = 0; rep < 50; ++rep) {
      SpherePoint xi = random_unit(rng, n);
      SpherePoint eta = random_unit(rng, n);
      auto sums = abel_kernel_sums(n, r, xi, eta, 120);
      worst_p = std::max(worst_p, std::abs(sums.phat - poisson_kernel(n, r, xi, eta)));
      Multivector diff = sums.qhat - conjugate_poisson_kernel(n, r, xi, eta);
      worst_q = std::max(worst_q, mv_norm(diff));
    }
    push(out, "abel_poisson_n" + std::to_string(n), worst_p, 1e-8);
    push(out, "abel_conjugate_n" + std::to_string(n), worst_q, 1e-8);
  }
  return out;
}

std::vector<CheckResult> check_extensions(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (int n : {3, 4}) {
    SpectralCoefficients coeffs = random_spectrum(n, 3, seed + std::uint64_t(n));
    MonogenicField lemma = lemma_extension_field(coeffs, HyperAlgebra::clifford);
    MonogenicField series = zonal_series_field(coeffs);

    std::mt19937_64 rng(seed * 31 + std::uint64_t(n));
    double worst_lemma = 0.0;
    double worst_series = 0.0;
    double worst_agree = 0.0;
    double worst_dbar = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      BallPoint x = random_ball(rng, n, 0.9);
      worst_lemma = std::max(worst_lemma, mv_norm(dirac_apply(lemma, x, 1e-4).DF));
      worst_series = std::max(worst_series, mv_norm(dirac_apply(series, x, 1e-4).DF));
      worst_agree = std::max(worst_agree, mv_norm(lemma.eval(x) - series.eval(x)));
      // Dbar f = d f / d x0 for monogenic f
      worst_dbar = std::max(
          worst_dbar, mv_norm(dirac_apply(lemma, x, 1e-4).DbarF - lemma.dbar(x)));
    }
    std::string suffix = "_n" + std::to_string(n);
    push(out, "monogenic_lemma" + suffix, worst_lemma, 1e-6);
    push(out, "monogenic_zonal_series" + suffix, worst_series, 1e-6);
    push(out, "routes_agree" + suffix, worst_agree, 1e-6);
    push(out, "dbar_is_d0" + suffix, worst_dbar, 1e-6);

    {  // the Schwarz quadrature route against the lemma route at moderate radius
      QuadratureRule rule = product_rule(n, n == 3 ? 28 : 16);
      BoundaryFunction u = boundary_from_spectrum(coeffs, "seeded");
      MonogenicField schwarz = schwarz_field(u, rule, 32);
      double worst = 0.0;
      for (int rep = 0; rep < 10; ++rep) {
        BallPoint x = random_ball(rng, n, 0.55);
        worst = std::max(worst, mv_norm(schwarz.eval(x) - lemma.eval(x)));
      }
      push(out, "schwarz_integral_agrees" + suffix, worst, 1e-6);
    }
  }
  {  // numeric-radial operation vs the per-degree field, quaternionic case
    SpectralCoefficients coeffs = random_spectrum(4, 3, seed + 99);
    MonogenicField quat = lemma_extension_field(coeffs, HyperAlgebra::quaternion);
    std::mt19937_64 rng(seed * 77);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
      BallPoint x = random_ball(rng, 4, 0.9);
      worst = std::max(worst, mv_norm(quat_regular_extend(coeffs, x) - quat.eval(x)));
    }
    push(out, "quat_numeric_vs_closed", worst, 1e-12);
  }
  return out;
}

std::vector<CheckResult> run_verification_suite(std::uint64_t seed) {
  std::vector<CheckResult> all;
  for (auto& part : {check_special_functions(), check_quadrature_and_bases(),
                     check_zonal_identities(), check_kernels(), check_extensions(seed)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

}  // namespace douglas
