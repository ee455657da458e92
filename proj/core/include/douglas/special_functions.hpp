#pragma once

#include <cstdint>

namespace douglas {

// Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double surface_area(int n);

// Volume of the unit ball B_n: pi^{n/2} / Gamma(n/2 + 1).
double ball_volume(int n);

// Gegenbauer polynomial C_k^lambda(t), lambda > 0, by the forward
// three-term recurrence. k is capped at 512.
double gegenbauer(int k, double lambda, double t);

// Zonal polynomial P_k^n normalized so that P_k^n(1) = 1.
// For n > 2 this is C_k^{(n-2)/2}(t) / C_k^{(n-2)/2}(1); for n = 2 it is
// the Chebyshev polynomial cos(k arccos t).
double legendre_pkn(int n, int k, double t);

// dim H^n_k, the dimension of the space of degree-k spherical harmonics
// in n variables: 1 for k = 0, (n+2k-2)(n+k-3)!/(k!(n-2)!) for k >= 1.
std::int64_t dim_harmonics(int n, int k);

// Zonal normalization constant c_{n,k} of the addition theorem,
// (1/omega_{n-1}) (n+2k-2) Gamma(n+k-1) / ((n+k-2) k! Gamma(n-1)),
// with c_{n,0} = 1/omega_{n-1}.
double cnk(int n, int k);

// The closed-form kernel
//   J(r,t) = -r^n [nt - (n-4)t r^4 - (n+2) r^2 + (n-2) r^6] / (1 - 2t r^2 + r^4)^{n/2+1}
// for 0 < r < 1, extended at r = 1 by its limit 2 / (2^n sin^n(theta/2)),
// t = cos theta. Requires |t| < 1 when r = 1.
double jkernel(int n, double r, double t);

// Truncated series -omega_{n-1} * sum_{k=1..K} k r^{2k+n-2} c_{n,k} P_k^n(t);
// converges to jkernel(n, r, t) as K grows (r < 1).
double jseries(int n, double r, double t, int K);

}  // namespace douglas
