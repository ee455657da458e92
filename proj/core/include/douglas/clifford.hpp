#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace douglas {

// Dense element of the real Clifford algebra Cl(0,m), generators e_1..e_m
// with e_j e_k + e_k e_j = -2 delta_jk. Blades are indexed by bitmask:
// bit i set  <=>  generator e_{i+1} present; mask 0 is the scalar blade.
// Quaternions are the m = 2 instance under i <-> e1, j <-> e2, k <-> e1e2.
//
// Values are immutable in spirit: every operation returns a fresh value.
class Multivector {
 public:
  explicit Multivector(int m);
  Multivector(int m, std::vector<double> coeffs);

  static Multivector scalar(int m, double value);
  static Multivector blade(int m, std::uint32_t mask, double value);

  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::uint32_t mask) const { return coeffs_[mask]; }
  double& operator[](std::uint32_t mask) { return coeffs_[mask]; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(double s) const;
  Multivector operator*(const Multivector& o) const;
  Multivector& operator+=(const Multivector& o);

  std::string str() const;  // e.g. "1.5 + 2 e1 - 0.5 e1e2"

 private:
  int m_;
  std::vector<double> coeffs_;
};

inline Multivector operator*(double s, const Multivector& a) { return a * s; }

// Product of basis blades in Cl(0,m). Returns the resulting blade mask
// (XOR) and the sign from anticommutation swaps plus e_k^2 = -1 contractions.
struct BladeProduct {
  std::uint32_t mask;
  int sign;  // +1 or -1
};
BladeProduct blade_product(std::uint32_t maskA, std::uint32_t maskB, int m);

Multivector mv_mul(const Multivector& a, const Multivector& b);

// Clifford conjugation: grade-k blade gets sign (-1)^{k(k+1)/2}.
// Anti-involution; Sc(a * conj(a)) = sum of squared coefficients.
Multivector mv_conj(const Multivector& a);

struct MvParts {
  double scalar;
  Multivector nonscalar;
  double norm;
};
MvParts mv_parts(const Multivector& a);

double mv_scalar(const Multivector& a);
double mv_norm(const Multivector& a);

// Paravector x_0 + x_1 e_1 + ... + x_{n-1} e_{n-1}: identifies R^n with a
// subspace of Cl(0, n-1).
struct Paravector {
  std::vector<double> point;
};

Multivector embed_paravector(const Paravector& p);
Multivector embed_paravector(const std::vector<double>& point);

}  // namespace douglas
