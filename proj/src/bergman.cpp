#include "bergtoep/bergman.hpp"

#include <cmath>

#include "bergtoep/groups.hpp"
#include "bergtoep/rng.hpp"

namespace bergtoep {

double abs_sq(const Point& z) {
  double s = 0.0;
  for (const cplx& c : z) s += std::norm(c);
  return s;
}

cplx herm_inner(const Point& z, const Point& w) {
  if (z.size() != w.size()) throw std::invalid_argument("herm_inner: dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

double log_norm_sq(const MultiIndex& r, const Weight& wt) {
  return log_factorial(r) + log_gamma(wt.lambda()) -
         log_gamma(wt.lambda() + degree(r));
}

double norm_sq(const MultiIndex& r, const Weight& wt) {
  return std::exp(log_norm_sq(r, wt));
}

cplx kernel_eval(const Point& z, const Point& w, const Weight& wt) {
  if (static_cast<int>(z.size()) != wt.n() || static_cast<int>(w.size()) != wt.n())
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  if (!(abs_sq(z) < 1.0) || !(abs_sq(w) < 1.0))
    throw std::domain_error("kernel_eval: point outside the open ball");
  // Re(1 - z.conj(w)) > 0 on the ball, so the principal log never meets the cut.
  return std::exp(-wt.lambda() * std::log(cplx(1.0) - herm_inner(z, w)));
}

namespace {

cplx int_pow(cplx base, int e) {
  cplx acc{1.0};
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

cplx monomial(const Point& z, const MultiIndex& r) {
  cplx acc{1.0};
  for (std::size_t i = 0; i < z.size(); ++i) acc *= int_pow(z[i], r[i]);
  return acc;
}

}  // namespace

cplx kernel_eval_truncated(const Point& z, const Point& w, const Weight& wt,
                           int max_degree) {
  const auto basis = enumerate_basis(wt.n(), max_degree);
  cplx acc{};
  for (const MultiIndex& r : basis)
    acc += monomial(z, r) * std::conj(monomial(w, r)) * std::exp(-log_norm_sq(r, wt));
  return acc;
}

double ABFactors::a_eig(int k) const {
  const int m = wt_.m();
  const double lam = wt_.lambda();
  double acc = 1.0;
  for (int j = m; j < 2 * m; ++j) acc *= (lam + j + k) / (lam + j);
  return acc;
}

double ABFactors::b_eig(int k) const {
  const int m = wt_.m();
  const double lam = wt_.lambda();
  double acc = 1.0;
  for (int j = 0; j < m; ++j) acc *= (lam + j + k) / (lam + j);
  return acc;
}

double ab_eigenvalue(int k, const Weight& wt) { return ABFactors(wt).ab_eig(k); }

double gram_consistency_residual(const MultiIndex& r, const Weight& wt) {
  if (wt.m() == 0) return 0.0;
  const double lhs = ab_eigenvalue(degree(r), wt) * norm_sq(r, wt.shifted());
  const double rhs = norm_sq(r, wt);
  return std::abs(lhs - rhs) / rhs;
}

double coherent_covariance_residual(const GroupElement& g, const Point& z,
                                    const Weight& wt, int max_degree) {
  if (g.kind != GroupKind::elliptic)
    throw std::invalid_argument(
        "coherent_covariance_residual: only elliptic elements act on the truncated basis");
  if (!(wt.lambda() > wt.n()))
    throw std::domain_error("coherent_covariance_residual: requires lambda > n");
  if (!(abs_sq(z) < 1.0))
    throw std::domain_error("coherent_covariance_residual: z outside the open ball");

  const GroupElement ginv = inverse(g);
  const cplx j_inv = d_lambda(ginv, wt);        // j(g^{-1}, .) is constant on the torus
  const cplx j_conj = std::conj(d_lambda(g, wt));
  const Point gz = act(g, z);

  // Fixed deterministic sample grid, radius <= 0.6.
  std::mt19937_64 gen(0x5eedbeefULL);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    const Point u = random_ball_point(wt.n(), 0.6, gen);
    const cplx lhs = j_inv * kernel_eval_truncated(act(ginv, u), z, wt, max_degree);
    const cplx rhs = j_conj * kernel_eval(u, gz, wt);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

Point random_ball_point(int n, double radius, std::mt19937_64& gen) {
  for (;;) {
    Point z(n);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double re = uniform(gen, -radius, radius);
      const double im = uniform(gen, -radius, radius);
      z[i] = {re, im};
      s += re * re + im * im;
    }
    if (s < radius * radius) return z;
  }
}

}  // namespace bergtoep
