#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace douglas {

// Point on the unit sphere S^{n-1}.
struct SpherePoint {
  std::vector<double> coords;

  int dim() const { return int(coords.size()); }
  double dot(const SpherePoint& o) const;
};

// Nodes-plus-weights discretization of integration over S^{n-1}.
// Invariants: sum of weights = omega_{n-1}; weights positive;
// polynomial_exactness is the degree up to which polynomial integration
// is exact (0 for Monte Carlo rules).
struct QuadratureRule {
  int n = 0;
  std::vector<SpherePoint> nodes;
  std::vector<double> weights;
  int polynomial_exactness = 0;
  std::string label;

  std::size_t size() const { return nodes.size(); }
};

// Quadrature over the unit ball B_n: tensor of a radial Gauss-Legendre
// layer (weight r^{n-1}) with a sphere product rule.
struct BallRule {
  int n = 0;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;
  int sphere_exactness = 0;
  int radial_order = 0;
};

// Spherical-coordinate product rule: Gauss-Gegenbauer in each polar angle,
// uniform trapezoid in azimuth. polynomial_exactness = 2*level - 1.
// Supported dimensions 2 <= n <= 6.
QuadratureRule product_rule(int n, int level);

// Smallest product rule whose polynomial_exactness covers `degree`.
QuadratureRule product_rule_for_degree(int n, int degree);

// Uniform points via normalized Gaussian vectors from mt19937_64 with an
// explicit Box-Muller transform; equal weights omega_{n-1}/count.
// Bitwise reproducible for a fixed seed.
QuadratureRule monte_carlo_rule(int n, std::int64_t count, std::uint64_t seed);

// Copy of a rule with every node rotated by `angle` in the (axis_a, axis_b)
// coordinate plane. Used to offset the second grid of a double integral.
QuadratureRule rotated_rule(const QuadratureRule& rule, double angle, int axis_a = 0, int axis_b = 1);

// The golden angle 2*pi*(1 - 1/phi), an irrational fraction of the turn.
double golden_angle();

// sum_i w_i f(node_i) with a fixed pairwise-tree summation order.
// f returning a non-finite value raises EvaluationError with the node.
double integrate(const QuadratureRule& rule, const std::function<double(const SpherePoint&)>& f);

// Reduces the zonal double integral over S^{n-1} x S^{n-1} of g(eta1 . eta2)
// to omega_{n-1} * omega_{n-2} * int_0^pi g(cos theta) sin^{n-2}(theta) dtheta,
// evaluated with 1-D Gauss-Legendre (16*level nodes).
double integrate_zonal_pair(int n, const std::function<double(double)>& g, int level);

BallRule ball_rule(int n, int radial_order, int sphere_level);

double integrate_ball(const BallRule& rule, const std::function<double(std::span<const double>)>& f);

// Deterministic pairwise tree reduction of a buffer of terms.
double pairwise_sum(std::span<const double> terms);

// CSV layout: header `n,count,exactness,label`, then rows `w,x0,...,x{n-1}`.
void save_rule_csv(const QuadratureRule& rule, std::ostream& os);
QuadratureRule load_rule_csv(std::istream& is);

}  // namespace douglas
