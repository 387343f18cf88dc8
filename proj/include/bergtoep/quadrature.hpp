#pragma once

#include <functional>

#include "bergtoep/bergman.hpp"
#include "bergtoep/parallel.hpp"

namespace bergtoep {

/// Nodes and weights on (0, 1) for the weight (1-x)^alpha x^beta,
/// alpha, beta > -1.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussJacobiRule gauss_jacobi(int npoints, double alpha, double beta);

struct QuadratureSpec {
  int radial_nodes = 24;
  int angular_nodes = 24;
  int max_doublings = 3;
  double tol = 1e-9;
};

/// Integral of f against the probability measure d mu_lambda on the ball at a
/// fixed resolution.  Polar factorization: the radius u = |z|^2 carries a
/// Gauss-Jacobi rule with weight (1-u)^{lambda-n-1} u^{n-1}, the direction
/// simplex carries the stick-breaking Jacobi rules, and each circle a uniform
/// angular rule (exact for trigonometric polynomials below the node count).
/// Requires lambda > n.
cplx ball_integral_fixed(const Weight& wt, const std::function<cplx(const Point&)>& f,
                         int radial_nodes, int angular_nodes,
                         Exec exec = Exec::parallel);

}  // namespace bergtoep
