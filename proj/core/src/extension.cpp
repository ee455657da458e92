#include "douglas/extension.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "douglas/errors.hpp"
#include "douglas/special_functions.hpp"
#include "gauss.hpp"

namespace douglas {

namespace {
constexpr double kDerivativeMargin = 1e-3;
}

double BallPoint::r() const {
  double s = 0.0;
  for (double c : coords) s += c * c;
  return std::sqrt(s);
}

SpherePoint BallPoint::direction() const {
  double rr = r();
  if (rr == 0.0) throw std::invalid_argument("BallPoint::direction: undefined at the origin");
  SpherePoint p;
  p.coords = coords;
  for (double& c : p.coords) c /= rr;
  return p;
}

std::vector<std::uint32_t> axis_blades_for(HyperAlgebra algebra, int n) {
  if (algebra == HyperAlgebra::quaternion) {
    if (n != 4) throw std::invalid_argument("quaternion algebra requires n = 4");
    return {0b01u, 0b10u, 0b11u};  // i, j, k = e1, e2, e1e2
  }
  if (n < 3) throw std::invalid_argument("clifford hypercomplex setting requires n >= 3");
  std::vector<std::uint32_t> blades(std::size_t(n - 1));
  for (int i = 0; i < n - 1; ++i) blades[std::size_t(i)] = 1u << i;
  return blades;
}

Multivector embed_point(const BallPoint& x, int m, const std::vector<std::uint32_t>& axis_blades) {
  Multivector X(m);
  X[0] = x.coords[0];
  for (std::size_t i = 0; i < axis_blades.size(); ++i) X[axis_blades[i]] = x.coords[i + 1];
  return X;
}

double poisson_extend(const SpectralCoefficients& coeffs, const BallPoint& x) {
  double s = 0.0;
  for (const auto& [kj, b] : coeffs.values) {
    if (b == 0.0) continue;
    const auto& basis = harmonic_basis(coeffs.n, kj.first);
    s += b * basis[std::size_t(kj.second - 1)].eval(x.coords);
  }
  return s;
}

double poisson_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("poisson_kernel: need 0 <= r < 1");
  double d2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double diff = eta.coords[std::size_t(i)] - r * xi.coords[std::size_t(i)];
    d2 += diff * diff;
  }
  return (1.0 - r * r) / (surface_area(n) * std::pow(d2, 0.5 * n));
}

std::vector<double> gradient_extension(const SpectralCoefficients& coeffs, const BallPoint& x) {
  std::vector<double> g(std::size_t(coeffs.n), 0.0);
  std::vector<double> tmp(static_cast<std::size_t>(coeffs.n));
  for (const auto& [kj, b] : coeffs.values) {
    if (b == 0.0) continue;
    const auto& basis = harmonic_basis(coeffs.n, kj.first);
    basis[std::size_t(kj.second - 1)].eval_gradient(x.coords, tmp);
    for (int d = 0; d < coeffs.n; ++d) g[std::size_t(d)] += b * tmp[std::size_t(d)];
  }
  return g;
}

namespace {

// DbarU = (1/2)(d0 U - sum_i blade_i d_i U) assembled from a gradient vector.
Multivector dbar_from_gradient(const std::vector<double>& g, int m,
                               const std::vector<std::uint32_t>& blades) {
  Multivector out(m);
  out[0] = 0.5 * g[0];
  for (std::size_t i = 0; i < blades.size(); ++i) out[blades[i]] = -0.5 * g[i + 1];
  return out;
}

void gradient_of_degree(const SpectralCoefficients& coeffs, int k, std::span<const double> x,
                        std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  const auto& basis = harmonic_basis(coeffs.n, k);
  std::vector<double> tmp(out.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    double b = coeffs.get(k, int(j) + 1);
    if (b == 0.0) continue;
    basis[j].eval_gradient(x, tmp);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += b * tmp[d];
  }
}

void hessian0_of_degree(const SpectralCoefficients& coeffs, int k, std::span<const double> x,
                        std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  const auto& basis = harmonic_basis(coeffs.n, k);
  std::vector<double> tmp(out.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    double b = coeffs.get(k, int(j) + 1);
    if (b == 0.0) continue;
    basis[j].eval_hessian_col(x, 0, tmp);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += b * tmp[d];
  }
}

// The lemma extension with the radial integral done by Gauss-Legendre:
// F(x) = U(x) + 2 NSc int_0^1 s^{power} DbarU(sx) x ds.
Multivector lemma_extend_numeric(const SpectralCoefficients& coeffs, const BallPoint& x, int power,
                                 HyperAlgebra algebra, int radial_order) {
  const int n = coeffs.n;
  if (int(x.coords.size()) != n)
    throw std::invalid_argument("lemma extension: point dimension mismatch");
  auto blades = axis_blades_for(algebra, n);
  const int m = (algebra == HyperAlgebra::quaternion) ? 2 : n - 1;
  Multivector X = embed_point(x, m, blades);

  detail::Rule1D gl = detail::gauss_legendre_ab(radial_order, 0.0, 1.0);
  Multivector acc(m);
  BallPoint scaled;
  scaled.coords.resize(std::size_t(n));
  for (std::size_t s = 0; s < gl.nodes.size(); ++s) {
    for (int d = 0; d < n; ++d) scaled.coords[std::size_t(d)] = gl.nodes[s] * x.coords[std::size_t(d)];
    auto g = gradient_extension(coeffs, scaled);
    Multivector integrand = mv_mul(dbar_from_gradient(g, m, blades), X);
    acc += integrand * (gl.weights[s] * std::pow(gl.nodes[s], power));
  }
  acc[0] = 0.0;  // NSc
  return Multivector::scalar(m, poisson_extend(coeffs, x)) + acc * 2.0;
}

}  // namespace

Multivector quat_regular_extend(const SpectralCoefficients& coeffs, const BallPoint& q,
                                int radial_order) {
  if (coeffs.n != 4) throw std::invalid_argument("quat_regular_extend: requires n = 4");
  return lemma_extend_numeric(coeffs, q, 2, HyperAlgebra::quaternion, radial_order);
}

Multivector clifford_monogenic_extend_lemma(const SpectralCoefficients& coeffs, const BallPoint& x,
                                            int radial_order) {
  if (coeffs.n < 3) throw std::invalid_argument("clifford_monogenic_extend_lemma: requires n >= 3");
  return lemma_extend_numeric(coeffs, x, coeffs.n - 2, HyperAlgebra::clifford, radial_order);
}

MonogenicField lemma_extension_field(const SpectralCoefficients& coeffs, HyperAlgebra algebra) {
  const int n = coeffs.n;
  auto blades = axis_blades_for(algebra, n);
  const int m = (algebra == HyperAlgebra::quaternion) ? 2 : n - 1;

  std::vector<int> degrees;
  for (const auto& [kj, b] : coeffs.values)
    if (kj.first >= 1 && b != 0.0 && (degrees.empty() || degrees.back() != kj.first))
      degrees.push_back(kj.first);

  MonogenicField field;
  field.n = n;
  field.m = m;
  field.axis_blades = blades;
  field.provenance = FieldProvenance::lemma_integral;

  auto shared = std::make_shared<SpectralCoefficients>(coeffs);
  field.eval = [shared, n, m, blades, degrees](const BallPoint& x) {
    Multivector X = embed_point(x, m, blades);
    std::vector<double> g(static_cast<std::size_t>(n));
    Multivector acc(m);
    for (int k : degrees) {
      gradient_of_degree(*shared, k, x.coords, g);
      acc += mv_mul(dbar_from_gradient(g, m, blades), X) * (1.0 / (n + k - 2));
    }
    acc[0] = 0.0;
    return Multivector::scalar(m, poisson_extend(*shared, x)) + acc * 2.0;
  };
  field.dbar = [shared, n, m, blades, degrees](const BallPoint& x) {
    Multivector X = embed_point(x, m, blades);
    std::vector<double> g(static_cast<std::size_t>(n));
    std::vector<double> h(static_cast<std::size_t>(n));
    Multivector acc(m);
    double d0U = 0.0;
    for (int k : degrees) {
      gradient_of_degree(*shared, k, x.coords, g);
      hessian0_of_degree(*shared, k, x.coords, h);
      d0U += g[0];
      Multivector term = mv_mul(dbar_from_gradient(h, m, blades), X);
      term += dbar_from_gradient(g, m, blades);
      acc += term * (1.0 / (n + k - 2));
    }
    acc[0] = 0.0;
    return Multivector::scalar(m, d0U) + acc * 2.0;
  };
  return field;
}

namespace {

// 1/omega * [2/|eta - r xi|^n - (n-2)/r^{n-1} int_0^r rho^{n-2}/|eta - rho xi|^n drho]
double conjugate_radial_factor(int n, double r, double t, int radial_order) {
  auto inv_dist_n = [&](double rho) {
    return std::pow(1.0 - 2.0 * rho * t + rho * rho, -0.5 * n);
  };
  detail::Rule1D gl = detail::gauss_legendre_ab(radial_order, 0.0, r);
  double integral = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    integral += gl.weights[i] * std::pow(gl.nodes[i], n - 2) * inv_dist_n(gl.nodes[i]);
  double lead = 2.0 * inv_dist_n(r);
  return (lead - (n - 2.0) / std::pow(r, n - 1) * integral) / surface_area(n);
}

// eta-bar * xi - xi.eta as a multivector over Cl(0, n-1) paravectors.
Multivector angular_factor(int n, const SpherePoint& xi, const SpherePoint& eta) {
  Multivector E = embed_paravector(eta.coords);
  Multivector X = embed_paravector(xi.coords);
  Multivector out = mv_mul(mv_conj(E), X);
  out[0] -= xi.dot(eta);
  return out;
}

}  // namespace

Multivector conjugate_poisson_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                                     int radial_order) {
  if (n < 3) throw std::invalid_argument("conjugate_poisson_kernel: requires n >= 3");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("conjugate_poisson_kernel: need r in (0, 1)");
  double t = xi.dot(eta);
  double factor = conjugate_radial_factor(n, r, t, radial_order);
  return angular_factor(n, xi, eta) * (factor * r);
}

Multivector schwarz_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                           int radial_order) {
  if (n < 3) throw std::invalid_argument("schwarz_kernel: requires n >= 3");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("schwarz_kernel: need 0 <= r < 1");
  Multivector out = (r == 0.0) ? Multivector(n - 1)
                               : conjugate_poisson_kernel(n, r, xi, eta, radial_order);
  out[0] += poisson_kernel(n, r, xi, eta);
  return out;
}

Multivector schwarz_extend(const BoundaryFunction& u, const BallPoint& x, const QuadratureRule& rule,
                           int radial_order) {
  const int n = u.n;
  if (n < 3) throw std::invalid_argument("schwarz_extend: requires n >= 3");
  double r = x.r();
  if (r > 1.0 - kDerivativeMargin)
    throw std::invalid_argument("schwarz_extend: point too close to the boundary");
  const int m = n - 1;
  if (r == 0.0) {
    double mean = integrate(rule, u.evaluator) / surface_area(n);
    return Multivector::scalar(m, mean);
  }
  SpherePoint xi = x.direction();
  // Accumulate each blade with the same pairwise tree as integrate().
  std::vector<std::vector<double>> terms(std::size_t(1) << m,
                                         std::vector<double>(rule.size()));
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double uv = u.evaluator(rule.nodes[i]);
    if (!std::isfinite(uv))
      throw EvaluationError("schwarz_extend: boundary function non-finite", rule.nodes[i].coords, i);
    Multivector S = schwarz_kernel(n, r, xi, rule.nodes[i], radial_order);
    for (std::uint32_t blade = 0; blade < S.size(); ++blade)
      terms[blade][i] = rule.weights[i] * uv * S[blade];
  }
  Multivector out(m);
  for (std::uint32_t blade = 0; blade < out.size(); ++blade) out[blade] = pairwise_sum(terms[blade]);
  return out;
}

MonogenicField schwarz_field(const BoundaryFunction& u, const QuadratureRule& rule,
                             int radial_order) {
  MonogenicField field;
  field.n = u.n;
  field.m = u.n - 1;
  field.axis_blades = axis_blades_for(HyperAlgebra::clifford, u.n);
  field.provenance = FieldProvenance::schwarz_integral;
  auto shared_u = std::make_shared<BoundaryFunction>(u);
  auto shared_rule = std::make_shared<QuadratureRule>(rule);
  field.eval = [shared_u, shared_rule, radial_order](const BallPoint& x) {
    return schwarz_extend(*shared_u, x, *shared_rule, radial_order);
  };
  return field;
}

MonogenicField zonal_series_field(const SpectralCoefficients& coeffs) {
  const int n = coeffs.n;
  if (n < 3) throw std::invalid_argument("zonal_series_field: requires n >= 3");
  const int K = coeffs.K;
  const int m = n - 1;

  // Cache the boundary values once; C+_k u has polynomial degree <= 2K + 1.
  auto rule = std::make_shared<QuadratureRule>(product_rule_for_degree(n, 2 * K + 2));
  auto uvals = std::make_shared<std::vector<double>>(rule->size());
  for (std::size_t i = 0; i < rule->size(); ++i)
    (*uvals)[i] = synthesize(coeffs, rule->nodes[i]);

  MonogenicField field;
  field.n = n;
  field.m = m;
  field.axis_blades = axis_blades_for(HyperAlgebra::clifford, n);
  field.provenance = FieldProvenance::zonal_series;
  field.eval = [n, m, K, rule, uvals](const BallPoint& x) {
    const double omega = surface_area(n);
    double r = x.r();
    if (r == 0.0) {
      // Only the k = 0 (constant) term survives at the origin.
      std::vector<double> terms(rule->size());
      for (std::size_t i = 0; i < rule->size(); ++i)
        terms[i] = rule->weights[i] * (*uvals)[i];
      return Multivector::scalar(m, pairwise_sum(terms) / omega);
    }
    SpherePoint xi = x.direction();
    Multivector out(m);
    std::vector<std::vector<double>> blade_terms(std::size_t(1) << m,
                                                 std::vector<double>(rule->size()));
    for (int k = 0; k <= K; ++k) {
      double factor = (n + 2.0 * k - 2.0) / (n + k - 2.0) * std::pow(r, k) / omega;
      for (std::size_t i = 0; i < rule->size(); ++i) {
        Multivector cp = zonal_monogenic(n, k, +1, xi, rule->nodes[i]);
        double scale = rule->weights[i] * (*uvals)[i] * factor;
        for (std::uint32_t blade = 0; blade < cp.size(); ++blade)
          blade_terms[blade][i] = scale * cp[blade];
      }
      for (std::uint32_t blade = 0; blade < out.size(); ++blade)
        out[blade] += pairwise_sum(blade_terms[blade]);
    }
    return out;
  };
  return field;
}

Multivector zonal_monogenic(int n, int k, int sign, const SpherePoint& xi, const SpherePoint& eta) {
  if (n < 3) throw std::invalid_argument("zonal_monogenic: requires n >= 3 (degenerate weight at n = 2)");
  if (sign != 1 && sign != -1) throw std::invalid_argument("zonal_monogenic: sign must be +-1");
  double t = xi.dot(eta);
  double lambda = 0.5 * (n - 2);
  const int m = n - 1;
  if (sign > 0) {
    if (k < 0) throw std::invalid_argument("zonal_monogenic: C+ needs k >= 0");
    double scal = (n + k - 2.0) / (n - 2.0) * gegenbauer(k, lambda, t);
    Multivector out = (k >= 1) ? angular_factor(n, xi, eta) * gegenbauer(k - 1, 0.5 * n, t)
                               : Multivector(m);
    out[0] += scal;
    return out;
  }
  if (k < 1) throw std::invalid_argument("zonal_monogenic: C- needs k >= 1");
  double scal = double(k) / (n - 2.0) * gegenbauer(k, lambda, t);
  Multivector out = angular_factor(n, xi, eta) * (-gegenbauer(k - 1, 0.5 * n, t));
  out[0] += scal;
  return out;
}

AbelKernelSums abel_kernel_sums(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                                int K) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("abel_kernel_sums: need 0 <= r < 1");
  if (K < 0 || K > 200) throw std::invalid_argument("abel_kernel_sums: need 0 <= K <= 200");
  const int m = n - 1;
  const double omega = surface_area(n);
  Multivector phat(m);
  Multivector qhat(m);
  phat += zonal_monogenic(n, 0, +1, xi, eta);
  for (int k = 1; k <= K; ++k) {
    double rk = std::pow(r, k);
    Multivector cplus = zonal_monogenic(n, k, +1, xi, eta);
    Multivector cminus = zonal_monogenic(n, k, -1, xi, eta);
    phat += (cplus + cminus) * rk;
    qhat += cplus * (rk * k / (n + k - 2.0)) - cminus * rk;
  }
  return {phat[0] / omega, qhat * (1.0 / omega)};
}

DiracPair dirac_apply(const MonogenicField& F, const BallPoint& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("dirac_apply: need step > 0");
  if (x.r() + step > 1.0 - kDerivativeMargin + 1e-15)
    throw std::invalid_argument("dirac_apply: insufficient clearance from the boundary");
  const int n = F.n;
  Multivector D(F.m);
  Multivector Dbar(F.m);
  BallPoint p = x;
  for (int d = 0; d < n; ++d) {
    p.coords[std::size_t(d)] = x.coords[std::size_t(d)] + step;
    Multivector fp = F.eval(p);
    p.coords[std::size_t(d)] = x.coords[std::size_t(d)] - step;
    Multivector fm = F.eval(p);
    p.coords[std::size_t(d)] = x.coords[std::size_t(d)];
    Multivector deriv = (fp - fm) * (0.5 / step);
    if (d == 0) {
      D += deriv * 0.5;
      Dbar += deriv * 0.5;
    } else {
      Multivector blade = Multivector::blade(F.m, F.axis_blades[std::size_t(d - 1)], 1.0);
      Multivector prod = mv_mul(blade, deriv);
      D += prod * 0.5;
      Dbar += prod * (-0.5);
    }
  }
  return {D, Dbar};
}

}  // namespace douglas
