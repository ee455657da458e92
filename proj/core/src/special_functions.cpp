#include "douglas/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace douglas {

namespace {
constexpr int kMaxDegree = 512;

void check_degree(int k) {
  if (k < 0 || k > kMaxDegree) throw std::invalid_argument("degree k out of range [0, 512]");
}
}  // namespace

double surface_area(int n) {
  if (n < 1) throw std::invalid_argument("surface_area: need n >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("ball_volume: need n >= 1");
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double gegenbauer(int k, double lambda, double t) {
  check_degree(k);
  if (!(lambda > 0.0)) throw std::invalid_argument("gegenbauer: need lambda > 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * t;
  for (int j = 2; j <= k; ++j) {
    double next = (2.0 * t * (j + lambda - 1.0) * cur - (j + 2.0 * lambda - 2.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {
// C_k^lambda(1) = Gamma(k + 2 lambda) / (k! Gamma(2 lambda)), via log-gamma.
double gegenbauer_at_one(int k, double lambda) {
  return std::exp(std::lgamma(k + 2.0 * lambda) - std::lgamma(k + 1.0) - std::lgamma(2.0 * lambda));
}
}  // namespace

double legendre_pkn(int n, int k, double t) {
  if (n < 2) throw std::invalid_argument("legendre_pkn: need n >= 2");
  check_degree(k);
  if (n == 2) {
    // Chebyshev T_k; clamp guards rounding just outside [-1,1].
    double tc = t > 1.0 ? 1.0 : (t < -1.0 ? -1.0 : t);
    return std::cos(k * std::acos(tc));
  }
  double lambda = 0.5 * (n - 2);
  return gegenbauer(k, lambda, t) / gegenbauer_at_one(k, lambda);
}

std::int64_t dim_harmonics(int n, int k) {
  if (n < 2) throw std::invalid_argument("dim_harmonics: need n >= 2");
  if (k < 0) throw std::invalid_argument("dim_harmonics: need k >= 0");
  if (k == 0) return 1;
  auto binom = [](std::int64_t a, std::int64_t b) -> std::int64_t {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(n + k - 1, k) - binom(n + k - 3, k - 2);
}

double cnk(int n, int k) {
  if (n < 2) throw std::invalid_argument("cnk: need n >= 2");
  check_degree(k);
  double omega = surface_area(n);
  if (k == 0) return 1.0 / omega;
  // (n+2k-2) Gamma(n+k-1) / ((n+k-2) k! Gamma(n-1)), log-gamma to dodge overflow.
  double lg = std::lgamma(double(n + k - 1)) - std::lgamma(double(k + 1)) - std::lgamma(double(n - 1));
  return (n + 2.0 * k - 2.0) / (n + k - 2.0) * std::exp(lg) / omega;
}

double jkernel(int n, double r, double t) {
  if (n < 2) throw std::invalid_argument("jkernel: need n >= 2");
  if (!(r > 0.0) || r > 1.0) throw std::invalid_argument("jkernel: need r in (0, 1]");
  if (r == 1.0) {
    if (std::abs(t) >= 1.0) throw std::domain_error("jkernel: singular at r = 1, |t| = 1");
    // t = cos theta: sin^2(theta/2) = (1 - t)/2.
    double s2 = 0.5 * (1.0 - t);
    return 2.0 / (std::pow(2.0, n) * std::pow(s2, 0.5 * n));
  }
  double r2 = r * r;
  double r4 = r2 * r2;
  double r6 = r4 * r2;
  double num = n * t - (n - 4.0) * t * r4 - (n + 2.0) * r2 + (n - 2.0) * r6;
  double den = std::pow(1.0 - 2.0 * t * r2 + r4, 0.5 * n + 1.0);
  return -std::pow(r, n) * num / den;
}

double jseries(int n, double r, double t, int K) {
  if (n < 2) throw std::invalid_argument("jseries: need n >= 2");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("jseries: need r in (0, 1)");
  double omega = surface_area(n);
  double sum = 0.0;
  for (int k = 1; k <= K; ++k) {
    sum += k * std::pow(r, 2 * k + n - 2) * cnk(n, k) * legendre_pkn(n, k, t);
  }
  return -omega * sum;
}

}  // namespace douglas
