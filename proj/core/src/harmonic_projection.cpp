#include "harmonic_projection.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace douglas::detail {

namespace {

using Rat = boost::multiprecision::cpp_rational;
using RatPoly = std::map<MonomialKey, Rat>;

int exponent_at(MonomialKey key, int var) { return int((key >> (8 * var)) & 0xffu); }

MonomialKey with_exponent(MonomialKey key, int var, int e) {
  MonomialKey cleared = key & ~(MonomialKey(0xffu) << (8 * var));
  return cleared | (MonomialKey(std::uint64_t(e)) << (8 * var));
}

RatPoly laplacian(const RatPoly& p, int n) {
  RatPoly out;
  for (const auto& [key, c] : p) {
    for (int d = 0; d < n; ++d) {
      int e = exponent_at(key, d);
      if (e >= 2) out[with_exponent(key, d, e - 2)] += c * e * (e - 1);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// p * |x|^{2m}
RatPoly times_r2_power(const RatPoly& p, int n, int m) {
  RatPoly cur = p;
  for (int step = 0; step < m; ++step) {
    RatPoly next;
    for (const auto& [key, c] : cur)
      for (int d = 0; d < n; ++d) next[with_exponent(key, d, exponent_at(key, d) + 2)] += c;
    cur = std::move(next);
  }
  return cur;
}

void axpy(RatPoly& acc, const Rat& a, const RatPoly& p) {
  for (const auto& [key, c] : p) {
    auto& slot = acc[key];
    slot += a * c;
    if (slot == 0) acc.erase(key);
  }
}

}  // namespace

MonomialKey pack_exponents(const std::vector<int>& e) {
  MonomialKey key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("pack_exponents: exponent out of range");
    key |= MonomialKey(std::uint64_t(e[i])) << (8 * i);
  }
  return key;
}

std::vector<int> unpack_exponents(MonomialKey key, int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[std::size_t(i)] = exponent_at(key, i);
  return e;
}

std::map<MonomialKey, double> harmonic_projection(int n, const std::vector<int>& alpha) {
  if (int(alpha.size()) != n) throw std::invalid_argument("harmonic_projection: bad exponent count");
  const int k = std::accumulate(alpha.begin(), alpha.end(), 0);
  RatPoly p{{pack_exponents(alpha), Rat(1)}};
  const int jmax = k / 2;

  // The factor picked up by Delta^i acting on |x|^{2j} h_{k-2j}.
  auto mu = [&](int i, int j) {
    Rat prod = 1;
    int d = k - 2 * j;
    for (int l = 0; l < i; ++l) prod *= Rat(2 * (j - l)) * Rat(2 * (j - l) + 2 * d + n - 2);
    return prod;
  };

  std::vector<RatPoly> lap(std::size_t(jmax) + 1);
  lap[0] = p;
  for (int i = 1; i <= jmax; ++i) lap[std::size_t(i)] = laplacian(lap[std::size_t(i - 1)], n);

  // Back-substitute the canonical decomposition from the bottom up.
  std::vector<RatPoly> h(std::size_t(jmax) + 1);  // h[j] has degree k-2j
  for (int j = jmax; j >= 0; --j) {
    RatPoly residual = lap[std::size_t(j)];
    for (int jp = j + 1; jp <= jmax; ++jp)
      axpy(residual, -mu(j, jp), times_r2_power(h[std::size_t(jp)], n, jp - j));
    Rat diag = mu(j, j);
    RatPoly hj;
    for (const auto& [key, c] : residual) hj[key] = c / diag;
    h[std::size_t(j)] = std::move(hj);
  }

  if (!laplacian(h[0], n).empty())
    throw std::logic_error("harmonic_projection: rational Laplacian not identically zero");

  std::map<MonomialKey, double> out;
  for (const auto& [key, c] : h[0]) out[key] = c.convert_to<double>();
  return out;
}

}  // namespace douglas::detail
