#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "douglas/quadrature.hpp"

namespace douglas {

// Homogeneous harmonic polynomial of degree k in n variables; the basis
// elements y_j of H^n_k live here (and double as solid harmonics when
// evaluated off the sphere).
class HarmonicPolynomial {
 public:
  struct Term {
    std::array<std::uint8_t, 8> exps;  // exponent of variable i
    double coeff;
  };

  HarmonicPolynomial(int n, int k, std::map<std::uint64_t, double> coeffs);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  double eval(std::span<const double> x) const;
  // d/dx_d for all d, written into out (size n).
  void eval_gradient(std::span<const double> x, std::span<double> out) const;
  // d^2/(dx_i dx_d) for all d, written into out (size n).
  void eval_hessian_col(std::span<const double> x, int i, std::span<double> out) const;

  // Coefficient-level Laplacian, as a (possibly empty) coefficient map.
  std::map<std::uint64_t, double> laplacian_coeffs() const;
  double max_abs_coeff() const;

 private:
  int n_;
  int k_;
  std::vector<Term> terms_;
};

// Fourier-Laplace coefficients b_j of a boundary function,
// indexed by (degree k, basis index j), 1 <= j <= dim H^n_k.
struct SpectralCoefficients {
  int n = 0;
  int K = 0;  // max degree present
  std::map<std::pair<int, int>, double> values;

  double get(int k, int j) const;
  void set(int k, int j, double b);
};

struct BoundaryFunction {
  int n = 0;
  std::function<double(const SpherePoint&)> evaluator;
  std::optional<SpectralCoefficients> exact_spectrum;
  std::string label;
};

// Deterministic orthonormal basis of H^n_k: harmonic projections of the
// degree-k monomials (exact rational bookkeeping), then Gram-Schmidt with
// one re-orthogonalization pass against an exact-degree-2k product rule.
// Cached per (n, k); safe for concurrent readers. n in 2..6, k <= 16.
const std::vector<HarmonicPolynomial>& harmonic_basis(int n, int k);

// b_j = int u(eta) y_j(eta) dS for all k <= K.
SpectralCoefficients project(const BoundaryFunction& u, int K, const QuadratureRule& rule);

// sum_j y_j(xi) y_j(eta) over the degree-k basis; equals c_{n,k} P_k^n(xi.eta).
double zonal_sum(int n, int k, const SpherePoint& xi, const SpherePoint& eta);

// c_{n,k} int P_k^n(xi.eta) g(eta) dS; reproduces g(xi) for g in H^n_k.
double funk_hecke_apply(int n, int k, const HarmonicPolynomial& g, const SpherePoint& xi,
                        const QuadratureRule& rule);

double synthesize(const SpectralCoefficients& coeffs, const SpherePoint& point);

// Band-limited boundary function from an explicit mode list (k, j, coefficient).
BoundaryFunction boundary_from_modes(int n, const std::vector<std::tuple<int, int, double>>& modes,
                                     std::string label = "modes");
BoundaryFunction boundary_from_spectrum(SpectralCoefficients coeffs, std::string label);

// CSV layout: header `k,j,b`, then one row per coefficient.
void save_spectrum_csv(const SpectralCoefficients& coeffs, std::ostream& os);
SpectralCoefficients load_spectrum_csv(std::istream& is, int n);

}  // namespace douglas
