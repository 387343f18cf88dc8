#include "bergtoep/toeplitz.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace bergtoep {

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

cplx entry_closed_form(const SymbolExpr& phi, const MultiIndex& r,
                       const MultiIndex& s, const Weight& wt) {
  const int n = wt.n();
  if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n ||
      phi.n() != n)
    throw std::invalid_argument("entry_closed_form: dimension mismatch");
  const double lam = wt.lambda();
  cplx acc{};
  MultiIndex alpha(n);
  for (const SymbolTerm& t : phi.terms()) {
    bool match = true;
    for (int i = 0; i < n; ++i) {
      if (s[i] + t.a[i] != r[i] + t.b[i]) {
        match = false;
        break;
      }
      alpha[i] = s[i] + t.a[i];
    }
    if (!match) continue;
    const double mag = std::exp(log_factorial(alpha) + log_gamma(lam) -
                                log_gamma(lam + t.p + degree(alpha)));
    acc += t.c * pochhammer(lam - n, t.p) * mag;
  }
  return acc * std::exp(-0.5 * (log_norm_sq(r, wt) + log_norm_sq(s, wt)));
}

EntryQuadratureResult entry_quadrature(const std::function<cplx(const Point&)>& phi,
                                       const MultiIndex& r, const MultiIndex& s,
                                       const Weight& wt, const QuadratureSpec& spec,
                                       Exec exec) {
  if (!(wt.lambda() > wt.n()))
    throw std::domain_error("entry_quadrature: requires lambda > n");
  const auto integrand = [&](const Point& z) {
    return phi(z) * monomial(z, s) * std::conj(monomial(z, r));
  };
  const double scale = std::exp(-0.5 * (log_norm_sq(r, wt) + log_norm_sq(s, wt)));

  int nr = spec.radial_nodes, na = spec.angular_nodes;
  cplx prev = scale * ball_integral_fixed(wt, integrand, nr, na, exec);
  double est = std::abs(prev);
  for (int d = 0; d < spec.max_doublings; ++d) {
    nr *= 2;
    na *= 2;
    const cplx cur = scale * ball_integral_fixed(wt, integrand, nr, na, exec);
    est = std::abs(cur - prev);
    prev = cur;
    if (est < spec.tol) break;
  }
  return {prev, est};
}

OperatorMatrix assemble(const SymbolExpr& phi, const Weight& wt, int max_degree,
                        Exec exec, std::size_t max_basis) {
  if (phi.n() != wt.n()) throw std::invalid_argument("assemble: dimension mismatch");
  std::vector<MultiIndex> basis = enumerate_basis(wt.n(), max_degree, max_basis);
  const std::size_t dim = basis.size();
  CMatrix m(dim, dim);
  par_for(static_cast<std::int64_t>(dim * dim), exec, [&](std::int64_t idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / dim;
    const std::size_t j = static_cast<std::size_t>(idx) % dim;
    m(i, j) = entry_closed_form(phi, basis[i], basis[j], wt);
  });
  return OperatorMatrix{std::move(basis), std::move(m), wt, phi.hash()};
}

std::vector<std::pair<MultiIndex, cplx>> diagonal_spectrum(const SymbolExpr& phi,
                                                           const Weight& wt,
                                                           int max_degree) {
  if (!is_elliptic_invariant(phi))
    throw std::invalid_argument("diagonal_spectrum: symbol is not elliptic-invariant");
  std::vector<std::pair<MultiIndex, cplx>> out;
  for (const MultiIndex& r : enumerate_basis(wt.n(), max_degree))
    out.emplace_back(r, entry_closed_form(phi, r, r, wt));
  return out;
}

namespace {

void require_compatible(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.basis != b.basis) throw std::invalid_argument("operator matrices: basis mismatch");
  if (a.weight.n() != b.weight.n() || a.weight.lambda() != b.weight.lambda())
    throw std::invalid_argument("operator matrices: weight mismatch");
}

}  // namespace

double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b, Exec exec) {
  require_compatible(a, b);
  const CMatrix ab = multiply(a.entries, b.entries, exec);
  const CMatrix ba = multiply(b.entries, a.entries, exec);
  return frobenius_norm(subtract(ab, ba), exec);
}

OperatorMatrix torus_rep_matrix(const GroupElement& g, const Weight& wt,
                                int max_degree) {
  if (g.kind != GroupKind::elliptic)
    throw std::invalid_argument("torus_rep_matrix: elliptic elements only");
  if (g.n != wt.n()) throw std::invalid_argument("torus_rep_matrix: dimension mismatch");
  std::vector<MultiIndex> basis = enumerate_basis(wt.n(), max_degree);
  CMatrix m(basis.size(), basis.size());
  const cplx phase =
      std::polar(1.0, 6.283185307179586476925286766559 * wt.lambda() * g.cover_x);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    cplx diag = phase;
    for (int k = 0; k < wt.n(); ++k) diag *= int_pow(std::conj(g.torus[k]), basis[i][k]);
    m(i, i) = diag;
  }
  return OperatorMatrix{std::move(basis), std::move(m), wt, 0};
}

double intertwine_residual(const SymbolExpr& phi, const GroupElement& g,
                           const Weight& wt, int max_degree, Exec exec) {
  const OperatorMatrix rep = torus_rep_matrix(g, wt, max_degree);
  const OperatorMatrix t_phi = assemble(phi, wt, max_degree, exec);
  const OperatorMatrix t_phig = assemble(torus_transform(phi, g.torus), wt, max_degree, exec);
  const CMatrix lhs = multiply(rep.entries, t_phi.entries, exec);
  const CMatrix rhs = multiply(t_phig.entries, rep.entries, exec);
  return frobenius_norm(subtract(lhs, rhs), exec);
}

double spectral_radius(const OperatorMatrix& a) {
  const std::size_t dim = a.entries.rows();
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = a.entries(i, j);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
  double rad = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    rad = std::max(rad, std::abs(es.eigenvalues()(i)));
  return rad;
}

}  // namespace bergtoep
