#include "bergtoep/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace bergtoep {

GaussJacobiRule gauss_jacobi(int npoints, double alpha, double beta) {
  if (npoints < 1) throw std::invalid_argument("gauss_jacobi: npoints >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::domain_error("gauss_jacobi: alpha, beta > -1 required");

  // Monic Jacobi recurrence on (-1, 1) with weight (1-x)^alpha (1+x)^beta.
  const double ab = alpha + beta;
  Eigen::VectorXd diag(npoints), sub(npoints > 1 ? npoints - 1 : 0);
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < npoints; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag(k) = (beta * beta - alpha * alpha) / den;
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                              log_gamma(beta + 1.0) - log_gamma(ab + 2.0));
  for (int k = 1; k < npoints; ++k) {
    double bk;
    if (k == 1) {
      bk = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double t = 2.0 * k + ab;
      bk = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    sub(k - 1) = std::sqrt(bk);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: tridiagonal eigensolve failed");

  GaussJacobiRule rule;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  const double scale = std::exp(-(ab + 1.0) * std::log(2.0));  // map (-1,1) -> (0,1)
  for (int i = 0; i < npoints; ++i) {
    const double xi = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (1.0 + xi);
    rule.weights[i] = mu0 * v0 * v0 * scale;
  }
  return rule;
}

cplx ball_integral_fixed(const Weight& wt, const std::function<cplx(const Point&)>& f,
                         int radial_nodes, int angular_nodes, Exec exec) {
  const int n = wt.n();
  const double lam = wt.lambda();
  if (!(lam > n)) throw std::domain_error("ball_integral: requires lambda > n");

  // Radius u = |z|^2 and stick-breaking simplex coordinates.
  const GaussJacobiRule ru = gauss_jacobi(radial_nodes, lam - n - 1.0, n - 1.0);
  std::vector<GaussJacobiRule> ry;
  for (int j = 1; j <= n - 1; ++j)
    ry.push_back(gauss_jacobi(radial_nodes, static_cast<double>(n - 1 - j), 0.0));

  const double two_pi = 6.283185307179586476925286766559;
  std::vector<double> cos_t(angular_nodes), sin_t(angular_nodes);
  for (int a = 0; a < angular_nodes; ++a) {
    cos_t[a] = std::cos(two_pi * a / angular_nodes);
    sin_t[a] = std::sin(two_pi * a / angular_nodes);
  }
  const double ang_w = two_pi / angular_nodes;

  // Normalization of d mu_lambda together with the 2^{-n} polar Jacobian.
  const double c0 = std::exp(log_gamma(lam) - n * std::log(3.14159265358979323846) -
                             log_gamma(lam - n) - n * std::log(2.0));

  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= radial_nodes;    // u and the y_j
  for (int i = 0; i < n; ++i) total *= angular_nodes;   // one circle per coordinate
  // radial block is the slow index
  std::int64_t ang_total = 1;
  for (int i = 0; i < n; ++i) ang_total *= angular_nodes;

  const cplx sum = chunked_sum<cplx>(total, exec, [&](std::int64_t idx) {
    std::int64_t a_idx = idx % ang_total;
    std::int64_t r_idx = idx / ang_total;

    const int iu = static_cast<int>(r_idx % radial_nodes);
    r_idx /= radial_nodes;
    double w = ru.weights[iu];
    const double u = ru.nodes[iu];

    // sigma_j via stick breaking
    double rest = 1.0;
    std::vector<double> sigma(n, 1.0);
    for (int j = 0; j < n - 1; ++j) {
      const int iy = static_cast<int>(r_idx % radial_nodes);
      r_idx /= radial_nodes;
      const double y = ry[j].nodes[iy];
      w *= ry[j].weights[iy];
      sigma[j] = rest * y;
      rest *= 1.0 - y;
    }
    sigma[n - 1] = rest;

    Point z(n);
    for (int j = n - 1; j >= 0; --j) {
      const int ia = static_cast<int>(a_idx % angular_nodes);
      a_idx /= angular_nodes;
      const double rho = std::sqrt(u * sigma[j]);
      z[j] = cplx(rho * cos_t[ia], rho * sin_t[ia]);
      w *= ang_w;
    }
    return w * f(z);
  });
  return c0 * sum;
}

}  // namespace bergtoep
