#include "gauss.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace douglas::detail {

namespace {

// Golub-Welsch: eigen-decompose the Jacobi matrix of the monic
// three-term recurrence; nodes are eigenvalues, weights mu0 * v[0]^2.
Rule1D golub_welsch(const std::vector<double>& offdiag_sq, double mu0) {
  const int N = int(offdiag_sq.size()) + 1;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i + 1 < N; ++i) {
    double b = std::sqrt(offdiag_sq[std::size_t(i)]);
    J(i, i + 1) = b;
    J(i + 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigensolver failed");

  Rule1D rule;
  rule.nodes.resize(std::size_t(N));
  rule.weights.resize(std::size_t(N));
  for (int i = 0; i < N; ++i) {
    rule.nodes[std::size_t(i)] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[std::size_t(i)] = mu0 * v0 * v0;
  }
  // The weight is symmetric; enforce exact node/weight symmetry.
  for (int i = 0, j = N - 1; i < j; ++i, --j) {
    double t = 0.5 * (rule.nodes[std::size_t(j)] - rule.nodes[std::size_t(i)]);
    rule.nodes[std::size_t(i)] = -t;
    rule.nodes[std::size_t(j)] = t;
    double w = 0.5 * (rule.weights[std::size_t(i)] + rule.weights[std::size_t(j)]);
    rule.weights[std::size_t(i)] = w;
    rule.weights[std::size_t(j)] = w;
  }
  if (N % 2 == 1) rule.nodes[std::size_t(N / 2)] = 0.0;
  return rule;
}

}  // namespace

Rule1D gauss_gegenbauer(int N, double mu) {
  if (N < 1) throw std::invalid_argument("gauss_gegenbauer: need N >= 1");
  if (mu < 0.0) throw std::invalid_argument("gauss_gegenbauer: need mu >= 0");
  // mu0 = int_{-1}^{1} (1-t^2)^mu dt = sqrt(pi) Gamma(mu+1) / Gamma(mu+3/2)
  double mu0 = std::sqrt(M_PI) * std::exp(std::lgamma(mu + 1.0) - std::lgamma(mu + 1.5));
  std::vector<double> b(std::size_t(N > 0 ? N - 1 : 0));
  for (int k = 1; k < N; ++k)
    b[std::size_t(k - 1)] =
        k * (k + 2.0 * mu) / ((2.0 * k + 2.0 * mu + 1.0) * (2.0 * k + 2.0 * mu - 1.0));
  return golub_welsch(b, mu0);
}

Rule1D gauss_legendre(int N) { return gauss_gegenbauer(N, 0.0); }

Rule1D gauss_legendre_ab(int N, double a, double b) {
  Rule1D base = gauss_legendre(N);
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < base.nodes.size(); ++i) {
    base.nodes[i] = mid + half * base.nodes[i];
    base.weights[i] *= half;
  }
  return base;
}

}  // namespace douglas::detail
