#include "douglas/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "douglas/errors.hpp"
#include "douglas/special_functions.hpp"
#include "harmonic_projection.hpp"

namespace douglas {

HarmonicPolynomial::HarmonicPolynomial(int n, int k, std::map<std::uint64_t, double> coeffs)
    : n_(n), k_(k) {
  if (n < 1 || n > 8) throw std::invalid_argument("HarmonicPolynomial: n out of range");
  terms_.reserve(coeffs.size());
  for (const auto& [key, c] : coeffs) {
    if (c == 0.0) continue;
    Term t{};
    for (int i = 0; i < 8; ++i) t.exps[std::size_t(i)] = std::uint8_t((key >> (8 * i)) & 0xffu);
    t.coeff = c;
    terms_.push_back(t);
  }
}

namespace {
inline double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}
}  // namespace

double HarmonicPolynomial::eval(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = t.coeff;
    for (int d = 0; d < n_; ++d) prod *= ipow(x[std::size_t(d)], t.exps[std::size_t(d)]);
    sum += prod;
  }
  return sum;
}

void HarmonicPolynomial::eval_gradient(std::span<const double> x, std::span<double> out) const {
  for (int d = 0; d < n_; ++d) out[std::size_t(d)] = 0.0;
  for (const auto& t : terms_) {
    for (int d = 0; d < n_; ++d) {
      int e = t.exps[std::size_t(d)];
      if (e == 0) continue;
      double prod = t.coeff * e * ipow(x[std::size_t(d)], e - 1);
      for (int j = 0; j < n_; ++j)
        if (j != d) prod *= ipow(x[std::size_t(j)], t.exps[std::size_t(j)]);
      out[std::size_t(d)] += prod;
    }
  }
}

void HarmonicPolynomial::eval_hessian_col(std::span<const double> x, int i, std::span<double> out) const {
  for (int d = 0; d < n_; ++d) out[std::size_t(d)] = 0.0;
  for (const auto& t : terms_) {
    int ei = t.exps[std::size_t(i)];
    for (int d = 0; d < n_; ++d) {
      // coefficient of d/dx_i d/dx_d applied to the monomial
      int ed = t.exps[std::size_t(d)];
      double prod;
      if (d == i) {
        if (ei < 2) continue;
        prod = t.coeff * ei * (ei - 1) * ipow(x[std::size_t(i)], ei - 2);
        for (int j = 0; j < n_; ++j)
          if (j != i) prod *= ipow(x[std::size_t(j)], t.exps[std::size_t(j)]);
      } else {
        if (ei == 0 || ed == 0) continue;
        prod = t.coeff * ei * ed * ipow(x[std::size_t(i)], ei - 1) * ipow(x[std::size_t(d)], ed - 1);
        for (int j = 0; j < n_; ++j)
          if (j != i && j != d) prod *= ipow(x[std::size_t(j)], t.exps[std::size_t(j)]);
      }
      out[std::size_t(d)] += prod;
    }
  }
}

std::map<std::uint64_t, double> HarmonicPolynomial::laplacian_coeffs() const {
  std::map<std::uint64_t, double> out;
  for (const auto& t : terms_) {
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i) key |= std::uint64_t(t.exps[std::size_t(i)]) << (8 * i);
    for (int d = 0; d < n_; ++d) {
      int e = t.exps[std::size_t(d)];
      if (e < 2) continue;
      std::uint64_t down = key - (std::uint64_t(2) << (8 * d));
      out[down] += t.coeff * e * (e - 1);
    }
  }
  return out;
}

double HarmonicPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

double SpectralCoefficients::get(int k, int j) const {
  auto it = values.find({k, j});
  return it == values.end() ? 0.0 : it->second;
}

void SpectralCoefficients::set(int k, int j, double b) {
  if (k < 0 || j < 1 || j > dim_harmonics(n, k))
    throw std::invalid_argument("SpectralCoefficients::set: index out of range");
  values[{k, j}] = b;
  K = std::max(K, k);
}

namespace {

// Degree-k exponent vectors in lexicographic order (first variable greediest).
void enumerate_exponents(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == n - 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur.push_back(e);
    enumerate_exponents(n, k - e, cur, out);
    cur.pop_back();
  }
}

struct Candidate {
  std::map<std::uint64_t, double> coeffs;
  std::vector<double> values;  // on the Gram rule nodes
};

double weighted_dot(const std::vector<double>& a, const std::vector<double>& b,
                    const std::vector<double>& w) {
  std::vector<double> terms(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) terms[i] = w[i] * a[i] * b[i];
  return pairwise_sum(terms);
}

std::vector<HarmonicPolynomial> build_basis(int n, int k) {
  if (n < 2 || n > 6) throw std::invalid_argument("harmonic_basis: supported dimensions are 2..6");
  if (k < 0 || k > 16) throw std::invalid_argument("harmonic_basis: need 0 <= k <= 16");

  const auto expected = std::size_t(dim_harmonics(n, k));
  if (k == 0) {
    std::map<std::uint64_t, double> c{{0, 1.0 / std::sqrt(surface_area(n))}};
    return {HarmonicPolynomial(n, 0, std::move(c))};
  }

  QuadratureRule rule = product_rule_for_degree(n, 2 * k);
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur;
  enumerate_exponents(n, k, cur, alphas);

  std::vector<Candidate> kept;
  kept.reserve(expected);
  for (const auto& alpha : alphas) {
    if (kept.size() == expected) break;
    Candidate cand;
    cand.coeffs = detail::harmonic_projection(n, alpha);
    if (cand.coeffs.empty()) continue;  // monomial with no harmonic component
    HarmonicPolynomial h(n, k, cand.coeffs);
    cand.values.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) cand.values[i] = h.eval(rule.nodes[i].coords);

    double norm0 = std::sqrt(weighted_dot(cand.values, cand.values, rule.weights));
    if (norm0 <= 0.0) continue;
    // Gram-Schmidt, run twice for numerical orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : kept) {
        double proj = weighted_dot(cand.values, b.values, rule.weights);
        for (std::size_t i = 0; i < cand.values.size(); ++i) cand.values[i] -= proj * b.values[i];
        for (const auto& [key, c] : b.coeffs) {
          auto& slot = cand.coeffs[key];
          slot -= proj * c;
        }
      }
    }
    double res = std::sqrt(weighted_dot(cand.values, cand.values, rule.weights));
    if (res <= 1e-6 * norm0) continue;  // linearly dependent on the kept set
    for (auto& v : cand.values) v /= res;
    for (auto& [key, c] : cand.coeffs) c /= res;
    kept.push_back(std::move(cand));
  }

  if (kept.size() != expected) {
    std::ostringstream os;
    os << "harmonic_basis: enumeration produced " << kept.size() << " elements for dim H^" << n
       << "_" << k << " = " << expected;
    throw std::logic_error(os.str());
  }

  std::vector<HarmonicPolynomial> basis;
  basis.reserve(expected);
  for (auto& c : kept) basis.emplace_back(n, k, std::move(c.coeffs));
  return basis;
}

}  // namespace

const std::vector<HarmonicPolynomial>& harmonic_basis(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<HarmonicPolynomial>>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<std::vector<HarmonicPolynomial>>(build_basis(n, k));
  return *slot;
}

SpectralCoefficients project(const BoundaryFunction& u, int K, const QuadratureRule& rule) {
  if (rule.n != u.n) throw std::invalid_argument("project: rule/boundary dimension mismatch");
  std::vector<double> uvals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    uvals[i] = u.evaluator(rule.nodes[i]);
    if (!std::isfinite(uvals[i]))
      throw EvaluationError("project: boundary function non-finite", rule.nodes[i].coords, i);
  }
  SpectralCoefficients out;
  out.n = u.n;
  out.K = K;
  std::vector<double> terms(rule.size());
  for (int k = 0; k <= K; ++k) {
    const auto& basis = harmonic_basis(u.n, k);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < rule.size(); ++i)
        terms[i] = rule.weights[i] * uvals[i] * basis[j].eval(rule.nodes[i].coords);
      out.values[{k, int(j) + 1}] = pairwise_sum(terms);
    }
  }
  return out;
}

double zonal_sum(int n, int k, const SpherePoint& xi, const SpherePoint& eta) {
  const auto& basis = harmonic_basis(n, k);
  double s = 0.0;
  for (const auto& y : basis) s += y.eval(xi.coords) * y.eval(eta.coords);
  return s;
}

double funk_hecke_apply(int n, int k, const HarmonicPolynomial& g, const SpherePoint& xi,
                        const QuadratureRule& rule) {
  double c = cnk(n, k);
  return c * integrate(rule, [&](const SpherePoint& eta) {
    return legendre_pkn(n, k, xi.dot(eta)) * g.eval(eta.coords);
  });
}

double synthesize(const SpectralCoefficients& coeffs, const SpherePoint& point) {
  double s = 0.0;
  for (const auto& [kj, b] : coeffs.values) {
    if (b == 0.0) continue;
    const auto& basis = harmonic_basis(coeffs.n, kj.first);
    s += b * basis[std::size_t(kj.second - 1)].eval(point.coords);
  }
  return s;
}

BoundaryFunction boundary_from_modes(int n, const std::vector<std::tuple<int, int, double>>& modes,
                                     std::string label) {
  SpectralCoefficients coeffs;
  coeffs.n = n;
  for (const auto& [k, j, c] : modes) coeffs.set(k, j, c);
  return boundary_from_spectrum(std::move(coeffs), std::move(label));
}

BoundaryFunction boundary_from_spectrum(SpectralCoefficients coeffs, std::string label) {
  BoundaryFunction u;
  u.n = coeffs.n;
  u.label = std::move(label);
  auto shared = std::make_shared<SpectralCoefficients>(std::move(coeffs));
  u.evaluator = [shared](const SpherePoint& p) { return synthesize(*shared, p); };
  u.exact_spectrum = *shared;
  return u;
}

void save_spectrum_csv(const SpectralCoefficients& coeffs, std::ostream& os) {
  os << "k,j,b\n";
  char buf[32];
  for (const auto& [kj, b] : coeffs.values) {
    std::snprintf(buf, sizeof(buf), "%.17g", b);
    os << kj.first << "," << kj.second << "," << buf << "\n";
  }
}

SpectralCoefficients load_spectrum_csv(std::istream& is, int n) {
  SpectralCoefficients out;
  out.n = n;
  std::string line;
  if (!std::getline(is, line) || line.rfind("k,j,b", 0) != 0)
    throw std::invalid_argument("load_spectrum_csv: missing `k,j,b` header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');
    int k = std::stoi(field);
    std::getline(ls, field, ',');
    int j = std::stoi(field);
    std::getline(ls, field, ',');
    out.set(k, j, std::stod(field));
  }
  return out;
}

}  // namespace douglas
