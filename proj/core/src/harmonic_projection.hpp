#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace douglas::detail {

// Monomial exponents packed 8 bits per variable, variable i at bits 8*i.
using MonomialKey = std::uint64_t;

MonomialKey pack_exponents(const std::vector<int>& e);
std::vector<int> unpack_exponents(MonomialKey key, int n);

// Harmonic projection of the monomial x^alpha (the top component of the
// canonical decomposition p = sum_j |x|^{2j} h_{k-2j}), computed with exact
// rational arithmetic and rounded to double on return. Throws logic_error
// if the rational Laplacian of the result is not identically zero.
std::map<MonomialKey, double> harmonic_projection(int n, const std::vector<int>& alpha);

}  // namespace douglas::detail
