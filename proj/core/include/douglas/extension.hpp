#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "douglas/clifford.hpp"
#include "douglas/harmonics.hpp"
#include "douglas/quadrature.hpp"

namespace douglas {

// Interior point x = r*xi of the unit ball.
struct BallPoint {
  std::vector<double> coords;

  int dim() const { return int(coords.size()); }
  double r() const;
  SpherePoint direction() const;
};

enum class FieldProvenance { schwarz_integral, zonal_series, lemma_integral };

// Which hypercomplex structure the field's values live in. Both use the
// Cl(0,m) engine; the quaternion case is Cl(0,2) with the fourth coordinate
// on the e1e2 blade (i <-> e1, j <-> e2, k <-> e1e2), domain = the algebra.
// The Clifford case uses m = n-1 with the domain embedded as paravectors.
enum class HyperAlgebra { quaternion, clifford };

// Monogenic (left-regular) field on the ball: eval gives F(x); when the
// construction admits an analytic derivative, dbar gives (DbarF)(x),
// otherwise it is empty and callers fall back to finite differences.
struct MonogenicField {
  int n = 0;
  int m = 0;                               // generator count of the value algebra
  std::vector<std::uint32_t> axis_blades;  // blades paired with d/dx_1 .. d/dx_{n-1}
  FieldProvenance provenance = FieldProvenance::lemma_integral;
  std::function<Multivector(const BallPoint&)> eval;
  std::function<Multivector(const BallPoint&)> dbar;
};

std::vector<std::uint32_t> axis_blades_for(HyperAlgebra algebra, int n);
Multivector embed_point(const BallPoint& x, int m, const std::vector<std::uint32_t>& axis_blades);

// U(x) = sum b_j H_{k,j}(x), the harmonic (Poisson) extension evaluated as
// solid harmonics; exact for band-limited spectra.
double poisson_extend(const SpectralCoefficients& coeffs, const BallPoint& x);

// (1/omega_{n-1}) (1-r^2)/|eta - r xi|^n
double poisson_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta);

// Analytic gradient of the Poisson extension.
std::vector<double> gradient_extension(const SpectralCoefficients& coeffs, const BallPoint& x);

// F(q) = U(q) + 2 NRe int_0^1 s^2 DbarU(sq) q ds  (n = 4, values in Cl(0,2)-as-H).
Multivector quat_regular_extend(const SpectralCoefficients& coeffs, const BallPoint& q,
                                int radial_order = 64);

// F(x) = U(x) + 2 NSc int_0^1 s^{n-2} DbarU(sx) x ds  (values in Cl(0,n-1)).
Multivector clifford_monogenic_extend_lemma(const SpectralCoefficients& coeffs, const BallPoint& x,
                                            int radial_order = 64);

// Monogenic extension of band-limited data with the lemma's radial integral
// carried out per degree (int_0^1 s^{n-2+k-1} ds = 1/(n+k-2)); provides the
// analytic Dbar evaluator used by the energy forms.
MonogenicField lemma_extension_field(const SpectralCoefficients& coeffs, HyperAlgebra algebra);

// Q_r(eta, xi): bivector-valued conjugate Poisson kernel (n >= 3).
Multivector conjugate_poisson_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                                     int radial_order = 64);

// S_r = P_r + Q_r.
Multivector schwarz_kernel(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                           int radial_order = 64);

// F(x) = int u(eta) S_r(eta, xi) dS_eta.
Multivector schwarz_extend(const BoundaryFunction& u, const BallPoint& x, const QuadratureRule& rule,
                           int radial_order = 64);

MonogenicField schwarz_field(const BoundaryFunction& u, const QuadratureRule& rule,
                             int radial_order = 64);

// The Schwarz construction evaluated through its zonal-monogenic expansion:
// F(x) = (1/omega) sum_{k<=K} ((n+2k-2)/(n+k-2)) r^k int C+_{n,k}(xi,eta) u(eta) dS.
// For band-limited data the sum is finite and the rule integrates it exactly,
// so the field is usable at any interior radius.
MonogenicField zonal_series_field(const SpectralCoefficients& coeffs);

// Zonal monogenics: sign=+1 gives C+_{n,k} (k >= 0), sign=-1 gives C-_{n,k-1}
// (k >= 1), per their Gegenbauer closed forms. n >= 3.
Multivector zonal_monogenic(int n, int k, int sign, const SpherePoint& xi, const SpherePoint& eta);

struct AbelKernelSums {
  double phat;
  Multivector qhat;
};

// Abel partial sums of the Poisson / conjugate Poisson kernel expansions in
// zonal monogenics; converge to the closed-form kernels as K grows.
AbelKernelSums abel_kernel_sums(int n, double r, const SpherePoint& xi, const SpherePoint& eta,
                                int K);

struct DiracPair {
  Multivector DF;
  Multivector DbarF;
};

// Central finite differences of the field composed with the algebra's left
// multiplication: D = (1/2)(d0 + sum blade_i d_i), Dbar with the minus sign.
DiracPair dirac_apply(const MonogenicField& F, const BallPoint& x, double step);

}  // namespace douglas
