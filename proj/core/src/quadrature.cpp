#include "douglas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "douglas/errors.hpp"
#include "douglas/special_functions.hpp"
#include "gauss.hpp"

namespace douglas {

double SpherePoint::dot(const SpherePoint& o) const {
  double s = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * o.coords[i];
  return s;
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

double golden_angle() {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  return 2.0 * M_PI * (1.0 - 1.0 / phi);
}

QuadratureRule product_rule(int n, int level) {
  if (n < 2 || n > 6) throw std::invalid_argument("product_rule: supported dimensions are 2..6");
  if (level < 1) throw std::invalid_argument("product_rule: need level >= 1");

  QuadratureRule rule;
  rule.n = n;
  rule.polynomial_exactness = 2 * level - 1;
  rule.label = "product(n=" + std::to_string(n) + ",level=" + std::to_string(level) + ")";

  const int azimuth_count = 2 * level;
  const double azimuth_w = 2.0 * M_PI / azimuth_count;

  if (n == 2) {
    rule.nodes.reserve(std::size_t(azimuth_count));
    rule.weights.reserve(std::size_t(azimuth_count));
    for (int i = 0; i < azimuth_count; ++i) {
      double phi = azimuth_w * i;
      rule.nodes.push_back({{std::cos(phi), std::sin(phi)}});
      rule.weights.push_back(azimuth_w);
    }
    return rule;
  }

  // Polar angle j (0-based) carries weight sin^{n-2-j}(theta); with
  // t = cos(theta) that is the Gegenbauer weight (1-t^2)^{(n-3-j)/2}.
  std::vector<detail::Rule1D> polar(std::size_t(n - 2));
  for (int j = 0; j < n - 2; ++j) {
    double mu = 0.5 * (n - 3 - j);
    polar[std::size_t(j)] = detail::gauss_gegenbauer(level, mu);
  }

  std::vector<std::size_t> idx(std::size_t(n - 2), 0);
  while (true) {
    double w_polar = 1.0;
    std::vector<double> cosines(std::size_t(n - 2));
    std::vector<double> sines(std::size_t(n - 2));
    for (int j = 0; j < n - 2; ++j) {
      double t = polar[std::size_t(j)].nodes[idx[std::size_t(j)]];
      w_polar *= polar[std::size_t(j)].weights[idx[std::size_t(j)]];
      cosines[std::size_t(j)] = t;
      sines[std::size_t(j)] = std::sqrt(std::max(0.0, 1.0 - t * t));
    }
    for (int i = 0; i < azimuth_count; ++i) {
      double phi = azimuth_w * i;
      SpherePoint p;
      p.coords.resize(std::size_t(n));
      double sin_prod = 1.0;
      for (int j = 0; j < n - 2; ++j) {
        p.coords[std::size_t(j)] = sin_prod * cosines[std::size_t(j)];
        sin_prod *= sines[std::size_t(j)];
      }
      p.coords[std::size_t(n - 2)] = sin_prod * std::cos(phi);
      p.coords[std::size_t(n - 1)] = sin_prod * std::sin(phi);
      rule.nodes.push_back(std::move(p));
      rule.weights.push_back(w_polar * azimuth_w);
    }
    // Next polar multi-index.
    int j = 0;
    for (; j < n - 2; ++j) {
      if (++idx[std::size_t(j)] < polar[std::size_t(j)].nodes.size()) break;
      idx[std::size_t(j)] = 0;
    }
    if (j == n - 2) break;
  }
  return rule;
}

QuadratureRule product_rule_for_degree(int n, int degree) {
  int level = std::max(1, (degree + 2) / 2);  // 2*level - 1 >= degree
  return product_rule(n, level);
}

QuadratureRule monte_carlo_rule(int n, std::int64_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("monte_carlo_rule: need n >= 2");
  if (count < 1) throw std::invalid_argument("monte_carlo_rule: need count >= 1");

  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng]() {
    // 53-bit mantissa draw; explicit so the stream is platform-stable.
    return double(rng() >> 11) * 0x1.0p-53;
  };
  double spare = 0.0;
  bool has_spare = false;
  auto gaussian = [&]() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double u2 = uniform01();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare = mag * std::sin(2.0 * M_PI * u2);
    has_spare = true;
    return mag * std::cos(2.0 * M_PI * u2);
  };

  QuadratureRule rule;
  rule.n = n;
  rule.polynomial_exactness = 0;
  rule.label = "monte_carlo(n=" + std::to_string(n) + ",count=" + std::to_string(count) +
               ",seed=" + std::to_string(seed) + ")";
  rule.nodes.reserve(std::size_t(count));
  rule.weights.assign(std::size_t(count), surface_area(n) / double(count));
  for (std::int64_t i = 0; i < count; ++i) {
    SpherePoint p;
    p.coords.resize(std::size_t(n));
    double norm = 0.0;
    do {
      norm = 0.0;
      for (int d = 0; d < n; ++d) {
        p.coords[std::size_t(d)] = gaussian();
        norm += p.coords[std::size_t(d)] * p.coords[std::size_t(d)];
      }
      norm = std::sqrt(norm);
    } while (norm < 1e-8);
    for (int d = 0; d < n; ++d) p.coords[std::size_t(d)] /= norm;
    rule.nodes.push_back(std::move(p));
  }
  return rule;
}

QuadratureRule rotated_rule(const QuadratureRule& rule, double angle, int axis_a, int axis_b) {
  if (axis_a == axis_b || axis_a < 0 || axis_b < 0 || axis_a >= rule.n || axis_b >= rule.n)
    throw std::invalid_argument("rotated_rule: bad rotation plane");
  QuadratureRule out = rule;
  out.label += "+rot";
  double c = std::cos(angle);
  double s = std::sin(angle);
  for (auto& p : out.nodes) {
    double a = p.coords[std::size_t(axis_a)];
    double b = p.coords[std::size_t(axis_b)];
    p.coords[std::size_t(axis_a)] = c * a - s * b;
    p.coords[std::size_t(axis_b)] = s * a + c * b;
  }
  return out;
}

double integrate(const QuadratureRule& rule, const std::function<double(const SpherePoint&)>& f) {
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw EvaluationError("integrate: integrand returned a non-finite value",
                            rule.nodes[i].coords, i);
    terms[i] = rule.weights[i] * v;
  }
  return pairwise_sum(terms);
}

double integrate_zonal_pair(int n, const std::function<double(double)>& g, int level) {
  if (n < 2) throw std::invalid_argument("integrate_zonal_pair: need n >= 2");
  if (level < 1) throw std::invalid_argument("integrate_zonal_pair: need level >= 1");
  const int count = 16 * level;
  detail::Rule1D gl = detail::gauss_legendre_ab(count, 0.0, M_PI);
  std::vector<double> terms(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double theta = gl.nodes[std::size_t(i)];
    double v = g(std::cos(theta));
    if (!std::isfinite(v))
      throw EvaluationError("integrate_zonal_pair: non-finite integrand", {std::cos(theta)},
                            std::size_t(i));
    terms[std::size_t(i)] = gl.weights[std::size_t(i)] * v * std::pow(std::sin(theta), n - 2);
  }
  return surface_area(n) * surface_area(n - 1) * pairwise_sum(terms);
}

BallRule ball_rule(int n, int radial_order, int sphere_level) {
  if (radial_order < 1) throw std::invalid_argument("ball_rule: need radial_order >= 1");
  QuadratureRule sphere = product_rule(n, sphere_level);
  detail::Rule1D radial = detail::gauss_legendre_ab(radial_order, 0.0, 1.0);

  BallRule out;
  out.n = n;
  out.sphere_exactness = sphere.polynomial_exactness;
  out.radial_order = radial_order;
  out.nodes.reserve(radial.nodes.size() * sphere.size());
  out.weights.reserve(radial.nodes.size() * sphere.size());
  for (std::size_t ri = 0; ri < radial.nodes.size(); ++ri) {
    double r = radial.nodes[ri];
    double wr = radial.weights[ri] * std::pow(r, n - 1);
    for (std::size_t si = 0; si < sphere.size(); ++si) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (int d = 0; d < n; ++d) x[std::size_t(d)] = r * sphere.nodes[si].coords[std::size_t(d)];
      out.nodes.push_back(std::move(x));
      out.weights.push_back(wr * sphere.weights[si]);
    }
  }
  return out;
}

double integrate_ball(const BallRule& rule, const std::function<double(std::span<const double>)>& f) {
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw EvaluationError("integrate_ball: non-finite integrand", rule.nodes[i], i);
    terms[i] = rule.weights[i] * v;
  }
  return pairwise_sum(terms);
}

void save_rule_csv(const QuadratureRule& rule, std::ostream& os) {
  os << rule.n << "," << rule.size() << "," << rule.polynomial_exactness << "," << rule.label
     << "\n";
  char buf[32];
  for (std::size_t i = 0; i < rule.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", rule.weights[i]);
    os << buf;
    for (double c : rule.nodes[i].coords) {
      std::snprintf(buf, sizeof(buf), "%.17g", c);
      os << "," << buf;
    }
    os << "\n";
  }
}

QuadratureRule load_rule_csv(std::istream& is) {
  QuadratureRule rule;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("load_rule_csv: missing header");
  {
    std::istringstream hs(line);
    std::string field;
    std::getline(hs, field, ',');
    rule.n = std::stoi(field);
    std::getline(hs, field, ',');
    std::size_t count = std::stoull(field);
    std::getline(hs, field, ',');
    rule.polynomial_exactness = std::stoi(field);
    std::getline(hs, rule.label);
    rule.nodes.reserve(count);
    rule.weights.reserve(count);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');
    rule.weights.push_back(std::stod(field));
    SpherePoint p;
    while (std::getline(ls, field, ',')) p.coords.push_back(std::stod(field));
    if (p.dim() != rule.n) throw std::invalid_argument("load_rule_csv: node dimension mismatch");
    rule.nodes.push_back(std::move(p));
  }
  if (rule.nodes.size() != rule.weights.size())
    throw std::invalid_argument("load_rule_csv: node/weight count mismatch");
  return rule;
}

}  // namespace douglas
