#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace douglas {

struct CheckResult {
  std::string name;
  bool pass;
  double measured;  // the quantity compared against the bound
  double bound;
  std::string detail;
};

// Special-function oracles: generating-function identities, the n = 2 log
// identity, jseries vs jkernel, the |J(r)|/J(1) <= n-1 ratio bound, and the
// r -> 1 boundary limit of J.
std::vector<CheckResult> check_special_functions();

// Quadrature invariants: weight sums against surface areas, ball volumes,
// Gram identity of the harmonic bases under exact-degree rules, dimension
// audit of dim H^n_k against basis enumeration.
std::vector<CheckResult> check_quadrature_and_bases();

// Funk-Hecke reproduction and the zonal addition theorem.
std::vector<CheckResult> check_zonal_identities();

// Kernel oracles: Abel partial sums vs closed-form Poisson / conjugate
// Poisson kernels, Poisson unit mass, Poisson series agreement.
std::vector<CheckResult> check_kernels();

// Monogenicity of both extension routes (finite-difference Dirac residual)
// and pointwise agreement between them.
std::vector<CheckResult> check_extensions(std::uint64_t seed = 7);

// The whole battery, in a fixed order.
std::vector<CheckResult> run_verification_suite(std::uint64_t seed = 7);

}  // namespace douglas
