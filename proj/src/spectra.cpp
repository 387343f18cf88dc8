#include "bergtoep/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace bergtoep {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx torus_average(GroupKind kind, int n, const std::vector<cplx>& torus) {
  const int d = torus_dim(kind, n);
  if (static_cast<int>(torus.size()) != d)
    throw std::invalid_argument("torus average: bad torus length");
  if (d == 0) return cplx{};
  cplx s{};
  for (const cplx& t : torus) s += t;
  const double denom = kind == GroupKind::elliptic ? 2.0 * n : 2.0 * (n - 1);
  return s / denom;
}

const QOperator& resolve_q(GroupKind kind, const Weight& wt,
                           const std::optional<QOperator>& q) {
  static const QOperator identities[3] = {QOperator::identity(GroupKind::elliptic),
                                          QOperator::identity(GroupKind::parabolic),
                                          QOperator::identity(GroupKind::hyperbolic)};
  if (q.has_value()) {
    if (q->kind != kind) throw std::invalid_argument("QOperator kind mismatch");
    return *q;
  }
  if (wt.m() >= 1 && kind != GroupKind::elliptic)
    throw std::invalid_argument(
        "phi_kernel: m >= 1 requires an explicit QOperator (identity included)");
  return identities[static_cast<int>(kind)];
}

}  // namespace

void FourierTable::compute_support() {
  double peak = 0.0;
  for (const cplx& c : coeffs) peak = std::max(peak, std::abs(c));
  support.assign(coeffs.size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    support[i] = std::abs(coeffs[i]) > support_eps * peak ? 1 : 0;
}

std::optional<std::size_t> FourierTable::index_of(const Freq& f) const {
  for (std::size_t i = 0; i < freqs.size(); ++i)
    if (freqs[i] == f) return i;
  return std::nullopt;
}

std::optional<cplx> FourierTable::at(const Freq& f) const {
  const auto i = index_of(f);
  if (!i) return std::nullopt;
  return coeffs[*i];
}

cplx phi_kernel(GroupKind kind, const std::vector<cplx>& torus, double line,
                const Weight& wt, const std::optional<QOperator>& q) {
  const cplx w = torus_average(kind, wt.n(), torus);
  switch (kind) {
    case GroupKind::elliptic:
      return std::exp(-wt.lambda() * std::log(cplx(1.0) - w));
    case GroupKind::parabolic: {
      const QOperator& qq = resolve_q(kind, wt, q);
      ParabolicPowerSum f(cplx(1.0) - w, 0.5, wt.lambda());
      f = apply_ab(std::move(f), wt);
      f = apply(qq, f);
      return f.eval(line);
    }
    case GroupKind::hyperbolic: {
      const QOperator& qq = resolve_q(kind, wt, q);
      HyperbolicPowerSum f(w, wt.lambda());
      f = apply_ab(std::move(f), wt);
      f = apply(qq, f);
      return f.eval(line);
    }
  }
  throw std::logic_error("phi_kernel: bad kind");
}

std::vector<cplx> phi_kernel_on_grid(const OrbitGrid& grid, const Weight& wt,
                                     const std::optional<QOperator>& q, Exec exec) {
  std::vector<cplx> values(static_cast<std::size_t>(grid.size()));
  const std::int64_t tcount = grid.torus_count();
  const int lcount = grid.line_count();
  if (grid.kind == GroupKind::elliptic) {
    par_for(tcount, exec, [&](std::int64_t ti) {
      values[static_cast<std::size_t>(ti)] =
          phi_kernel(grid.kind, grid.torus_at(ti), 0.0, wt, q);
    });
    return values;
  }
  const QOperator& qq = resolve_q(grid.kind, wt, q);
  par_for(tcount, exec, [&](std::int64_t ti) {
    const std::vector<cplx> torus = grid.torus_at(ti);
    const cplx w = torus_average(grid.kind, wt.n(), torus);
    if (grid.kind == GroupKind::parabolic) {
      ParabolicPowerSum f(cplx(1.0) - w, 0.5, wt.lambda());
      f = apply_ab(std::move(f), wt);
      f = apply(qq, f);
      for (int li = 0; li < lcount; ++li)
        values[static_cast<std::size_t>(ti * lcount + li)] = f.eval(grid.line_at(li));
    } else {
      HyperbolicPowerSum f(w, wt.lambda());
      f = apply_ab(std::move(f), wt);
      f = apply(qq, f);
      for (int li = 0; li < lcount; ++li)
        values[static_cast<std::size_t>(ti * lcount + li)] = f.eval(grid.line_at(li));
    }
  });
  return values;
}

double fourier_elliptic_closed(const MultiIndex& r, const Weight& wt) {
  if (static_cast<int>(r.size()) != wt.n())
    throw std::invalid_argument("fourier_elliptic_closed: dimension mismatch");
  return std::exp(-log_norm_sq(r, wt) - degree(r) * std::log(2.0 * wt.n()));
}

FourierTable fourier_elliptic_closed_table(const Weight& wt, int max_degree) {
  FourierTable t;
  for (const MultiIndex& r : enumerate_basis(wt.n(), max_degree)) {
    t.freqs.push_back(Freq{r, false, 0.0});
    t.coeffs.push_back(fourier_elliptic_closed(r, wt));
  }
  t.compute_support();
  return t;
}

FourierTable fourier_numeric(const OrbitGrid& grid, const std::vector<cplx>& values,
                             int max_torus_degree, const std::vector<double>& xi_grid,
                             Exec exec) {
  if (values.size() != static_cast<std::size_t>(grid.size()))
    throw std::invalid_argument("fourier_numeric: sample count mismatch");
  const int d = grid.dim();
  const int M = grid.torus_nodes;
  const std::int64_t tcount = grid.torus_count();
  const int lcount = grid.line_count();

  // torus lattice box [-K, K]^d
  const int K = max_torus_degree;
  std::int64_t kcount = 1;
  for (int i = 0; i < d; ++i) kcount *= (2 * K + 1);

  FourierTable out;
  out.aliasing_warning = d > 0 && 2 * K >= M;

  // roots of unity table: e^{-2 pi i q / M}
  std::vector<cplx> root(static_cast<std::size_t>(std::max(M, 1)));
  for (int qi = 0; qi < M; ++qi) root[qi] = std::polar(1.0, -kTwoPi * qi / M);

  const double torus_w = [&] {
    double w = grid.weight_scale;
    for (int i = 0; i < d; ++i) w /= M;
    return w;
  }();

  // stage 1: torus transform per line node
  std::vector<cplx> stage1(static_cast<std::size_t>(kcount * lcount));
  par_for(kcount, exec, [&](std::int64_t kflat) {
    std::vector<int> kvec(d);
    std::int64_t rem = kflat;
    for (int i = d - 1; i >= 0; --i) {
      kvec[i] = static_cast<int>(rem % (2 * K + 1)) - K;
      rem /= (2 * K + 1);
    }
    std::vector<cplx> acc(lcount, cplx{});
    for (std::int64_t ti = 0; ti < tcount; ++ti) {
      std::int64_t r = ti;
      int q = 0;
      for (int i = d - 1; i >= 0; --i) {
        const int digit = static_cast<int>(r % M);
        r /= M;
        q = static_cast<int>((q + static_cast<long long>(kvec[i]) * digit) % M);
      }
      q = (q % M + M) % M;
      const cplx ph = root[q];
      for (int li = 0; li < lcount; ++li)
        acc[li] += values[static_cast<std::size_t>(ti * lcount + li)] * ph;
    }
    for (int li = 0; li < lcount; ++li)
      stage1[static_cast<std::size_t>(kflat * lcount + li)] = torus_w * acc[li];
  });

  if (!grid.has_line()) {
    out.freqs.resize(static_cast<std::size_t>(kcount));
    out.coeffs = std::move(stage1);
    for (std::int64_t kflat = 0; kflat < kcount; ++kflat) {
      std::vector<int> kvec(d);
      std::int64_t rem = kflat;
      for (int i = d - 1; i >= 0; --i) {
        kvec[i] = static_cast<int>(rem % (2 * K + 1)) - K;
        rem /= (2 * K + 1);
      }
      out.freqs[static_cast<std::size_t>(kflat)] = Freq{std::move(kvec), false, 0.0};
    }
    out.compute_support();
    return out;
  }

  // stage 2: line transform int f(s) e^{-2 pi i xi s} ds over [-S, S]
  const double line_w = 2.0 * grid.halfwidth / grid.line_nodes;
  const std::size_t xcount = xi_grid.size();
  out.freqs.resize(static_cast<std::size_t>(kcount) * xcount);
  out.coeffs.assign(out.freqs.size(), cplx{});

  std::vector<std::vector<cplx>> phase(xcount, std::vector<cplx>(lcount));
  par_for(static_cast<std::int64_t>(xcount), exec, [&](std::int64_t xi_idx) {
    for (int li = 0; li < lcount; ++li)
      phase[static_cast<std::size_t>(xi_idx)][li] =
          std::polar(1.0, -kTwoPi * xi_grid[static_cast<std::size_t>(xi_idx)] *
                              grid.line_at(li));
  });

  par_for(kcount * static_cast<std::int64_t>(xcount), exec, [&](std::int64_t idx) {
    const std::int64_t kflat = idx / xcount;
    const std::size_t xi_idx = static_cast<std::size_t>(idx % xcount);
    cplx acc{};
    for (int li = 0; li < lcount; ++li)
      acc += stage1[static_cast<std::size_t>(kflat * lcount + li)] * phase[xi_idx][li];
    out.coeffs[static_cast<std::size_t>(idx)] = line_w * acc;
  });
  for (std::int64_t kflat = 0; kflat < kcount; ++kflat) {
    std::vector<int> kvec(d);
    std::int64_t rem = kflat;
    for (int i = d - 1; i >= 0; --i) {
      kvec[i] = static_cast<int>(rem % (2 * K + 1)) - K;
      rem /= (2 * K + 1);
    }
    for (std::size_t xi_idx = 0; xi_idx < xcount; ++xi_idx)
      out.freqs[static_cast<std::size_t>(kflat) * xcount + xi_idx] =
          Freq{kvec, true, xi_grid[xi_idx]};
  }
  out.compute_support();
  return out;
}

FourierTable nu_elliptic(const SymbolExpr& phi, const Weight& wt, int max_degree) {
  if (!is_elliptic_invariant(phi))
    throw std::invalid_argument("nu_elliptic: symbol is not elliptic-invariant");
  if (phi.n() != wt.n()) throw std::invalid_argument("nu_elliptic: dimension mismatch");
  const double lam = wt.lambda();
  const int n = wt.n();
  FourierTable t;
  for (const MultiIndex& r : enumerate_basis(n, max_degree)) {
    // un-normalized moment mu_r = <phi z^r, z^r>
    cplx mu{};
    MultiIndex alpha(n);
    for (const SymbolTerm& term : phi.terms()) {
      for (int i = 0; i < n; ++i) alpha[i] = r[i] + term.a[i];
      const double mag = std::exp(log_factorial(alpha) + log_gamma(lam) -
                                  log_gamma(lam + term.p + degree(alpha)));
      mu += term.c * pochhammer(lam - n, term.p) * mag;
    }
    const double scale =
        std::exp(-degree(r) * std::log(2.0 * n) - 2.0 * log_norm_sq(r, wt));
    t.freqs.push_back(Freq{r, false, 0.0});
    t.coeffs.push_back(mu * scale);
  }
  t.compute_support();
  return t;
}

namespace {

GroupElement grid_element(const OrbitGrid& grid, std::int64_t ti, int li) {
  const double line = grid.has_line() ? grid.line_at(li) : 0.0;
  GroupElement g;
  g.kind = grid.kind;
  g.n = grid.n;
  g.torus = grid.torus_at(ti);
  g.line = line;
  g.cover_x = 0.0;  // x-free representative; the tilde map removes the phase
  return g;
}

}  // namespace

std::vector<cplx> nu_tilde_identity_on_grid(const OrbitGrid& grid, const Weight& wt,
                                            Exec exec) {
  if (wt.m() != 0)
    throw std::domain_error("nu_tilde_identity_on_grid: requires m = 0");
  const Point z0 = base_point(grid.kind, grid.n);
  std::vector<cplx> values(static_cast<std::size_t>(grid.size()));
  const int lcount = grid.line_count();
  par_for(grid.torus_count(), exec, [&](std::int64_t ti) {
    for (int li = 0; li < lcount; ++li) {
      const GroupElement h = grid_element(grid, ti, li);
      const Point hz0 = act(h, z0);
      values[static_cast<std::size_t>(ti * lcount + li)] =
          d_lambda_tilde(grid.kind, h.line, wt) * kernel_eval(hz0, z0, wt);
    }
  });
  return values;
}

std::vector<cplx> nu_tilde_quadrature_on_grid(const SymbolExpr& phi,
                                              const OrbitGrid& grid, const Weight& wt,
                                              const QuadratureSpec& spec, Exec exec) {
  if (!(wt.lambda() > wt.n()))
    throw std::domain_error("nu_tilde_quadrature_on_grid: requires lambda > n");
  const Point z0 = base_point(grid.kind, grid.n);
  std::vector<cplx> values(static_cast<std::size_t>(grid.size()));
  const int lcount = grid.line_count();
  par_for(grid.torus_count(), exec, [&](std::int64_t ti) {
    for (int li = 0; li < lcount; ++li) {
      const GroupElement h = grid_element(grid, ti, li);
      const Point hz0 = act(h, z0);
      const auto integrand = [&](const Point& z) {
        return phi.eval(z) * kernel_eval(z, z0, wt) * std::conj(kernel_eval(z, hz0, wt));
      };
      const cplx integral = ball_integral_fixed(wt, integrand, spec.radial_nodes,
                                                spec.angular_nodes, Exec::serial);
      values[static_cast<std::size_t>(ti * lcount + li)] =
          d_lambda_tilde(grid.kind, h.line, wt) * integral;
    }
  });
  return values;
}

QuotientTable spectral_quotient(const FourierTable& nu, const FourierTable& denom) {
  QuotientTable q;
  q.freqs = nu.freqs;
  q.values.assign(nu.freqs.size(), cplx{});
  q.defined.assign(nu.freqs.size(), 0);
  for (std::size_t i = 0; i < nu.freqs.size(); ++i) {
    const auto j = denom.index_of(nu.freqs[i]);
    if (!j || !denom.support[*j]) continue;
    q.values[i] = nu.coeffs[i] / denom.coeffs[*j];
    q.defined[i] = 1;
  }
  return q;
}

FourierTable rr_star_apply(const FourierTable& f, const FourierTable& kernel_hat) {
  FourierTable out = f;
  for (std::size_t i = 0; i < out.freqs.size(); ++i) {
    const auto j = kernel_hat.index_of(out.freqs[i]);
    out.coeffs[i] = j ? out.coeffs[i] * kernel_hat.coeffs[*j] : cplx{};
  }
  out.compute_support();
  return out;
}

FourierTable rr_star_apply(const FourierTable& f, const Weight& wt) {
  FourierTable out = f;
  for (std::size_t i = 0; i < out.freqs.size(); ++i) {
    const Freq& fr = out.freqs[i];
    bool nonneg = !fr.has_xi && static_cast<int>(fr.k.size()) == wt.n();
    for (int e : fr.k) nonneg = nonneg && e >= 0;
    out.coeffs[i] = nonneg ? out.coeffs[i] * fourier_elliptic_closed(fr.k, wt) : cplx{};
  }
  out.compute_support();
  return out;
}

FourierTable sqrt_rr_star_multiplier(const FourierTable& kernel_hat, double tol) {
  double peak = 0.0;
  for (const cplx& c : kernel_hat.coeffs) peak = std::max(peak, std::abs(c));
  FourierTable out = kernel_hat;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    if (!kernel_hat.support[i]) {
      out.coeffs[i] = cplx{};
      continue;
    }
    const cplx c = kernel_hat.coeffs[i];
    if (std::abs(c.imag()) > tol * peak)
      throw NumericGuardError("sqrt_rr_star_multiplier: complex multiplier on the support");
    if (c.real() < -tol * peak)
      throw NumericGuardError("sqrt_rr_star_multiplier: negative multiplier on the support");
    out.coeffs[i] = std::sqrt(std::max(c.real(), 0.0));
  }
  out.compute_support();
  return out;
}

std::vector<L1Row> l1_estimate(GroupKind kind, const Weight& wt,
                               const std::vector<double>& s_values, int torus_nodes,
                               int line_nodes, const std::optional<QOperator>& q) {
  if (s_values.empty()) throw std::invalid_argument("l1_estimate: no halfwidths");
  std::vector<double> svals = s_values;
  std::sort(svals.begin(), svals.end());
  const double smax = svals.back();

  if (kind == GroupKind::elliptic) {
    const OrbitGrid grid = orbit_grid(kind, wt.n(), torus_nodes, 0, 0.0);
    const std::vector<cplx> vals = phi_kernel_on_grid(grid, wt, q);
    double total = 0.0;
    for (const cplx& v : vals) total += std::abs(v);
    total *= grid.node_weight();
    std::vector<L1Row> rows;
    for (double s : svals) rows.push_back({s, total, rows.empty() ? total : 0.0});
    return rows;
  }

  const OrbitGrid grid = orbit_grid(kind, wt.n(), torus_nodes, line_nodes, smax);
  const std::vector<cplx> vals = phi_kernel_on_grid(grid, wt, q);
  const double w = grid.node_weight();
  const int lcount = grid.line_count();

  std::vector<L1Row> rows;
  double prev = 0.0;
  for (double s : svals) {
    double acc = 0.0;
    for (std::int64_t ti = 0; ti < grid.torus_count(); ++ti)
      for (int li = 0; li < lcount; ++li)
        if (std::abs(grid.line_at(li)) <= s)
          acc += std::abs(vals[static_cast<std::size_t>(ti * lcount + li)]);
    acc *= w;
    rows.push_back({s, acc, acc - prev});
    prev = acc;
  }
  return rows;
}

}  // namespace bergtoep
