#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "douglas/extension.hpp"
#include "douglas/harmonics.hpp"
#include "douglas/quadrature.hpp"

namespace douglas {

enum class DoubleIntegralMode { offset_grids, abel_j };

struct DoubleIntegralParams {
  int level = 16;
  std::vector<double> abel = {0.90, 0.95, 0.975, 0.9875};
};

// A(u) = sum_{k>=1} k sum_j b_j^2. Exact for band-limited data.
double energy_spectral(const SpectralCoefficients& coeffs);

// int_{B_n} |grad U|^2 dV with analytic gradients of the solid harmonics.
double energy_gradient_volume(const SpectralCoefficients& coeffs, const BallRule& rule);

// int_{S^{n-1}} U dU/dr r^{n-1} dS at radius r; equals
// sum_k k r^{2k+n-2} sum_j b_j^2 and increases to the energy as r -> 1.
double energy_boundary_flux(const SpectralCoefficients& coeffs, const QuadratureRule& rule, double r);

// The singular double boundary integral
//   (1/omega) int int |u(eta1)-u(eta2)|^2 / |eta1-eta2|^n dS dS,
// either directly on two rotation-offset grids or as the Abel-regularized
// limit with the smooth kernel J(r, .)/2omega extrapolated in (1-r).
double energy_double_integral(const BoundaryFunction& u, DoubleIntegralMode mode,
                              const DoubleIntegralParams& params);

// int_{B_n} |DbarF|^2 dV; uses the field's analytic Dbar when available,
// otherwise finite differences on shrunken balls with a linear sweep in
// the shrink margin.
double energy_dbar_volume(const MonogenicField& F, const BallRule& rule);

struct StokesResult {
  double value;              // (1/2) Sc of the boundary integral
  double nonscalar_residue;  // norm of the discarded non-scalar part
};

// (1/2) Sc int_{S^{n-1}_r} conj(F) nu DbarF dS with nu the outward unit
// normal embedded in the field's algebra.
StokesResult energy_stokes_boundary(const MonogenicField& F, const QuadratureRule& rule, double r);

struct ReportConfig {
  std::set<std::string> forms;  // empty = all forms valid for n
  int K = 8;
  int level = 0;  // double-integral level; 0 = per-dimension default
  DoubleIntegralMode di_mode = DoubleIntegralMode::offset_grids;
  std::vector<double> abel = {0.90, 0.95, 0.975, 0.9875};
  std::uint64_t seed = 0;
  int radial_order = 64;
  double flux_divergence_cap = 1e6;
};

struct EnergyReport {
  int n = 0;
  std::string label;
  ReportConfig config;
  int levels_used = 0;
  std::map<std::string, double> forms;
  std::map<std::string, std::string> form_errors;
  struct Deviation {
    double abs;
    double rel;
  };
  std::map<std::string, Deviation> deviations;  // "formA|formB"
  std::map<std::string, double> residues;
  std::map<std::string, double> timings;  // seconds per form
  std::vector<std::string> notes;
};

// Runs every requested form independently (no form reads another's value;
// only the basis cache is shared), fills pairwise deviations, and embeds
// per-form errors instead of aborting sibling forms.
EnergyReport energy_report(const BoundaryFunction& u, const ReportConfig& config);

// Form names valid for a given dimension, in report order.
std::vector<std::string> default_forms(int n);

int default_double_integral_level(int n);

}  // namespace douglas
