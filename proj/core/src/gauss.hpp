#pragma once

#include <vector>

namespace douglas::detail {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1], exact for polynomials of degree <= 2N-1.
Rule1D gauss_legendre(int N);

// Gauss rule for the weight (1 - t^2)^mu on [-1, 1], mu >= 0
// (Gegenbauer/ultraspherical weight). Exact for polynomial f of
// degree <= 2N-1 against that weight.
Rule1D gauss_gegenbauer(int N, double mu);

// Gauss-Legendre mapped to [a, b].
Rule1D gauss_legendre_ab(int N, double a, double b);

}  // namespace douglas::detail
