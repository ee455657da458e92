#include "douglas/clifford.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace douglas {

namespace {
constexpr int kMaxGenerators = 16;

void check_m(int m) {
  if (m < 0 || m > kMaxGenerators) throw std::invalid_argument("Multivector: m out of range [0, 16]");
}
}  // namespace

Multivector::Multivector(int m) : m_(m) {
  check_m(m);
  coeffs_.assign(std::size_t(1) << m, 0.0);
}

Multivector::Multivector(int m, std::vector<double> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  check_m(m);
  if (coeffs_.size() != (std::size_t(1) << m))
    throw std::invalid_argument("Multivector: coefficient count must be 2^m");
}

Multivector Multivector::scalar(int m, double value) {
  Multivector r(m);
  r.coeffs_[0] = value;
  return r;
}

Multivector Multivector::blade(int m, std::uint32_t mask, double value) {
  Multivector r(m);
  if (mask >= r.coeffs_.size()) throw std::invalid_argument("Multivector::blade: mask out of range");
  r.coeffs_[mask] = value;
  return r;
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Multivector: mismatched generator counts");
  Multivector r(m_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Multivector: mismatched generator counts");
  Multivector r(m_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

Multivector Multivector::operator*(double s) const {
  Multivector r(m_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (m_ != o.m_) throw std::invalid_argument("Multivector: mismatched generator counts");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector Multivector::operator*(const Multivector& o) const { return mv_mul(*this, o); }

std::string Multivector::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t mask = 0; mask < coeffs_.size(); ++mask) {
    double c = coeffs_[mask];
    if (c == 0.0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << std::abs(c);
    for (int i = 0; i < m_; ++i)
      if (mask & (1u << i)) os << " e" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

BladeProduct blade_product(std::uint32_t maskA, std::uint32_t maskB, int m) {
  check_m(m);
  std::uint32_t limit = 1u << m;
  if (maskA >= limit || maskB >= limit)
    throw std::invalid_argument("blade_product: mask out of range for m");
  // Count transpositions needed to interleave e_A e_B into canonical order.
  int swaps = 0;
  std::uint32_t a = maskA >> 1;
  while (a != 0) {
    swaps += std::popcount(a & maskB);
    a >>= 1;
  }
  int sign = (swaps & 1) ? -1 : 1;
  // Each shared generator contracts with e_k^2 = -1.
  if (std::popcount(maskA & maskB) & 1) sign = -sign;
  return {maskA ^ maskB, sign};
}

Multivector mv_mul(const Multivector& a, const Multivector& b) {
  if (a.m() != b.m()) throw std::invalid_argument("mv_mul: mismatched generator counts");
  const int m = a.m();
  Multivector r(m);
  const std::size_t sz = a.size();
  for (std::uint32_t i = 0; i < sz; ++i) {
    double ai = a[i];
    if (ai == 0.0) continue;
    for (std::uint32_t j = 0; j < sz; ++j) {
      double bj = b[j];
      if (bj == 0.0) continue;
      BladeProduct p = blade_product(i, j, m);
      r[p.mask] += p.sign * ai * bj;
    }
  }
  return r;
}

Multivector mv_conj(const Multivector& a) {
  Multivector r(a.m());
  for (std::uint32_t mask = 0; mask < a.size(); ++mask) {
    int k = std::popcount(mask);
    int s = ((k * (k + 1) / 2) & 1) ? -1 : 1;
    r[mask] = s * a[mask];
  }
  return r;
}

double mv_scalar(const Multivector& a) { return a[0]; }

double mv_norm(const Multivector& a) {
  double s = 0.0;
  for (double c : a.coeffs()) s += c * c;
  return std::sqrt(s);
}

MvParts mv_parts(const Multivector& a) {
  Multivector ns = a;
  ns[0] = 0.0;
  return {a[0], ns, mv_norm(a)};
}

Multivector embed_paravector(const Paravector& p) { return embed_paravector(p.point); }

Multivector embed_paravector(const std::vector<double>& point) {
  if (point.empty()) throw std::invalid_argument("embed_paravector: empty point");
  int m = int(point.size()) - 1;
  Multivector r(m);
  r[0] = point[0];
  for (int i = 0; i < m; ++i) r[1u << i] = point[i + 1];
  return r;
}

}  // namespace douglas
