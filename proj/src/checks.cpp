#include "bergtoep/checks.hpp"

#include <cmath>

#include "bergtoep/rng.hpp"

namespace bergtoep {

CheckResult make_check(std::string suite, std::string name, double measured,
                       double limit, const std::string& cmp) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.measured = measured;
  r.limit = limit;
  r.cmp = cmp;
  r.pass = cmp == "<=" ? measured <= limit : measured >= limit;
  return r;
}

std::vector<std::string> suite_names() {
  return {"gram", "prop32", "commute", "spectrum-cross", "kernels", "l1", "measure-scale"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "gram") return suite_gram();
  if (name == "prop32") return suite_prop32();
  if (name == "commute") return suite_commute();
  if (name == "spectrum-cross") return suite_spectrum_cross();
  if (name == "kernels") return suite_kernels();
  if (name == "l1") return suite_l1();
  if (name == "measure-scale") return suite_measure_scale();
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckResult> run_all_suites() {
  std::vector<CheckResult> all;
  for (const std::string& s : suite_names()) {
    auto part = run_suite(s);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

namespace {

MultiIndex unit_index(int n, int axis, int value) {
  MultiIndex r(n, 0);
  r[axis] = value;
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::vector<SymbolExpr> invariant_corpus(int n) {
  const MultiIndex zero(n, 0);
  const MultiIndex e1 = unit_index(n, 0, 1);
  const MultiIndex e1x2 = unit_index(n, 0, 2);
  std::vector<SymbolExpr> corpus;
  corpus.push_back(SymbolExpr::constant(n, 1.0));
  corpus.push_back(SymbolExpr(n, {{1.0, e1, e1, 0}}));
  {
    std::vector<SymbolTerm> terms;
    for (int i = 0; i < n; ++i) {
      const MultiIndex ei = unit_index(n, i, 1);
      terms.push_back({1.0, ei, ei, 0});
    }
    corpus.push_back(SymbolExpr(n, std::move(terms)));
  }
  corpus.push_back(SymbolExpr(n, {{1.0, zero, zero, 1}}));
  corpus.push_back(SymbolExpr(n, {{1.0, e1x2, e1x2, 0}}));
  corpus.push_back(SymbolExpr(n, {{1.0, e1, e1, 1}}));
  corpus.push_back(SymbolExpr(n, {{1.0, zero, zero, 2}}));
  if (n >= 2) {
    MultiIndex e12(n, 0);
    e12[0] = 1;
    e12[1] = 1;
    corpus.push_back(SymbolExpr(n, {{1.0, e12, e12, 0}}));
  } else {
    const MultiIndex e1x3 = unit_index(n, 0, 3);
    corpus.push_back(SymbolExpr(n, {{1.0, e1x3, e1x3, 0}}));
  }
  corpus.push_back(SymbolExpr(n, {{2.0, zero, zero, 0}, {-1.0, e1, e1, 0}}));
  corpus.push_back(SymbolExpr(n, {{1.0, e1, e1, 0}, {0.5, zero, zero, 1}}));
  return corpus;
}

std::pair<SymbolExpr, SymbolExpr> noninvariant_pair(int n) {
  const MultiIndex zero(n, 0);
  const MultiIndex e1 = unit_index(n, 0, 1);
  SymbolExpr a(n, {{1.0, e1, zero, 0}, {1.0, zero, e1, 0}});  // z_1 + conj(z_1)
  SymbolExpr b(n, {{1.0, e1, e1, 0}});                        // |z_1|^2
  return {std::move(a), std::move(b)};
}

SymbolExpr random_symbol(int n, std::mt19937_64& gen) {
  const int nterms = 1 + static_cast<int>(gen() % 3);
  std::vector<SymbolTerm> terms;
  for (int t = 0; t < nterms; ++t) {
    SymbolTerm term;
    term.a.resize(n);
    term.b.resize(n);
    for (int i = 0; i < n; ++i) {
      term.a[i] = static_cast<int>(gen() % 3);
      term.b[i] = static_cast<int>(gen() % 3);
    }
    term.p = static_cast<int>(gen() % 3);
    term.c = {uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)};
    terms.push_back(std::move(term));
  }
  return SymbolExpr(n, std::move(terms));
}

std::vector<CheckResult> suite_gram() {
  std::vector<CheckResult> out;
  for (int n : {1, 2, 3}) {
    for (double lambda : {0.3, 0.7, 1.5, 2.5}) {
      const Weight wt(n, lambda);
      double worst = 0.0;
      for (const MultiIndex& r : enumerate_basis(n, 10))
        worst = std::max(worst, gram_consistency_residual(r, wt));
      out.push_back(make_check("gram", "n=" + std::to_string(n) + " lambda=" + fmt(lambda) +
                                           " m=" + std::to_string(wt.m()),
                               worst, 1e-10));
    }
  }
  return out;
}

std::vector<CheckResult> suite_prop32() {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 gen(1000 + i);
    const int n = 1 + i % 3;
    const double lambdas[4] = {0.4, 1.7, n + 0.5, n + 3.0};
    const Weight wt(n, lambdas[(i / 3) % 4]);
    const int max_degree = 2 + i % 4;
    const SymbolExpr phi = random_symbol(n, gen);
    const GroupElement g = random_element(GroupKind::elliptic, n, gen);
    worst = std::max(worst, intertwine_residual(phi, g, wt, max_degree));
  }
  std::vector<CheckResult> out;
  out.push_back(make_check("prop32", "intertwining residual, 50 random cases", worst, 1e-11));
  return out;
}

std::vector<CheckResult> suite_commute() {
  std::vector<CheckResult> out;
  for (int n : {1, 2}) {
    const std::vector<SymbolExpr> corpus = invariant_corpus(n);
    for (double lambda : {0.5, n + 1.0}) {
      const Weight wt(n, lambda);
      std::vector<OperatorMatrix> mats;
      for (const SymbolExpr& phi : corpus) mats.push_back(assemble(phi, wt, 6));
      double worst = 0.0;
      for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
          worst = std::max(worst, commutator_norm(mats[i], mats[j]));
      out.push_back(make_check("commute",
                               "invariant corpus pairs, n=" + std::to_string(n) +
                                   " lambda=" + fmt(lambda),
                               worst, 1e-12));
    }
    const auto [pa, pb] = noninvariant_pair(n);
    const Weight wt(n, 3.0);
    const double nc = commutator_norm(assemble(pa, wt, 6), assemble(pb, wt, 6));
    out.push_back(make_check("commute",
                             "fixed non-invariant pair, n=" + std::to_string(n), nc, 1e-2,
                             ">="));
  }
  return out;
}

std::vector<CheckResult> suite_spectrum_cross() {
  std::vector<CheckResult> out;
  for (int n : {1, 2}) {
    const std::vector<SymbolExpr> corpus = invariant_corpus(n);
    for (double lambda : {0.4, 0.9, 1.6, n + 0.5, n + 2.0}) {
      const Weight wt(n, lambda);
      const FourierTable denom = fourier_elliptic_closed_table(wt, 8);
      double worst = 0.0;
      for (int si = 0; si < 6; ++si) {
        const SymbolExpr& phi = corpus[si];
        const auto diag = diagonal_spectrum(phi, wt, 8);
        const QuotientTable q = spectral_quotient(nu_elliptic(phi, wt, 8), denom);
        for (std::size_t i = 0; i < diag.size(); ++i) {
          if (!q.defined[i]) {
            worst = 1.0;  // the elliptic denominator never vanishes
            continue;
          }
          worst = std::max(worst,
                           std::abs(q.values[i] - diag[i].second) / std::abs(diag[i].second));
        }
      }
      out.push_back(make_check("spectrum-cross",
                               "6 symbols, n=" + std::to_string(n) + " lambda=" + fmt(lambda),
                               worst, 1e-8));
    }
  }
  return out;
}

namespace {

double phi1_quotient_deviation(GroupKind kind, const Weight& wt, double scale) {
  OrbitGrid grid = kind == GroupKind::elliptic
                       ? orbit_grid(kind, wt.n(), 32, 0, 0.0)
                       : orbit_grid(kind, wt.n(), 16, 4001, 40.0);
  grid.weight_scale = scale;
  const int max_k = 6;
  std::vector<double> xi;
  if (kind != GroupKind::elliptic)
    for (int i = 0; i < 801; ++i) xi.push_back(-2.0 + 4.0 * i / 800.0);

  const std::vector<cplx> nu_vals = nu_tilde_identity_on_grid(grid, wt);
  const std::vector<cplx> ker_vals = phi_kernel_on_grid(grid, wt);
  const FourierTable nu_hat = fourier_numeric(grid, nu_vals, max_k, xi);
  const FourierTable ker_hat = fourier_numeric(grid, ker_vals, max_k, xi);
  const QuotientTable q = spectral_quotient(nu_hat, ker_hat);
  double worst = 0.0;
  for (std::size_t i = 0; i < q.freqs.size(); ++i)
    if (q.defined[i]) worst = std::max(worst, std::abs(q.values[i] - cplx(1.0)));
  return worst;
}

}  // namespace

std::vector<CheckResult> suite_kernels() {
  std::vector<CheckResult> out;

  // closed elliptic transform against the discrete transform
  for (int n : {1, 2}) {
    for (double lambda : {0.5, 2.0, 4.5}) {
      const Weight wt(n, lambda);
      const OrbitGrid grid = orbit_grid(GroupKind::elliptic, n, 64, 0, 0.0);
      const std::vector<cplx> vals = phi_kernel_on_grid(grid, wt);
      const FourierTable t = fourier_numeric(grid, vals, 10, {});
      double worst = 0.0;
      for (const MultiIndex& r : enumerate_basis(n, 10)) {
        const cplx numeric = *t.at(Freq{r, false, 0.0});
        worst = std::max(worst, std::abs(numeric - fourier_elliptic_closed(r, wt)));
      }
      out.push_back(make_check("kernels",
                               "elliptic transform closed vs dft, n=" + std::to_string(n) +
                                   " lambda=" + fmt(lambda),
                               worst, 1e-9));
    }
  }

  // phi = 1 spectral quotient for the three families at m = 0
  for (GroupKind kind :
       {GroupKind::elliptic, GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int n : {1, 2}) {
      for (double dl : {0.5, 2.0}) {
        const Weight wt(n, n + dl);
        out.push_back(make_check(
            "kernels",
            std::string("phi=1 quotient, ") + to_string(kind) + " n=" + std::to_string(n) +
                " lambda=" + fmt(wt.lambda()),
            phi1_quotient_deviation(kind, wt, 1.0), 1e-8));
      }
    }
  }

  // parabolic modulus identity |AB D|^2 = (1 + y^2/4)^{-(lambda+2m)}
  {
    const std::pair<int, double> cases[4] = {{1, 0.7}, {2, 1.5}, {3, 0.4}, {1, 2.5}};
    for (const auto& [n, lambda] : cases) {
      const Weight wt(n, lambda);
      ParabolicPowerSum f(cplx(2.0), 1.0, wt.lambda());
      f = apply_ab(std::move(f), wt);
      const double pref = std::pow(2.0, wt.lambda());
      double worst = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double y = -10.0 + 20.0 * i / 400.0;
        const double lhs = std::norm(pref * f.eval(y));
        const double rhs = std::pow(1.0 + 0.25 * y * y, -(wt.lambda() + 2.0 * wt.m()));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      out.push_back(make_check("kernels",
                               "parabolic modulus identity, n=" + std::to_string(n) +
                                   " lambda=" + fmt(lambda) + " m=" + std::to_string(wt.m()),
                               worst, 1e-12));
    }
  }

  // hyperbolic shift identity (I + N/r) cosh^{-l}
  {
    double worst = 0.0;
    for (double l : {0.7, 1.5, 3.2}) {
      for (double r : {0.9, 2.0}) {
        HyperbolicPowerSum f(cplx(0.0), l);
        f = f.one_plus_euler_over(r);
        for (int i = 0; i <= 100; ++i) {
          const double s = -5.0 + 10.0 * i / 100.0;
          const double ch = std::cosh(s);
          const double rhs =
              (r - l) / r * std::pow(ch, -l) + l / r * std::pow(ch, -(l + 2.0));
          worst = std::max(worst, std::abs(f.eval(s) - cplx(rhs)));
        }
      }
    }
    out.push_back(make_check("kernels", "hyperbolic cosh shift identity", worst, 1e-12));
  }

  return out;
}

std::vector<CheckResult> suite_l1() {
  std::vector<CheckResult> out;
  const std::vector<double> svals = {5.0, 10.0, 20.0, 40.0};

  struct Case {
    GroupKind kind;
    int n;
    double lambda;
    double tail_limit;
  };
  const Case cases[] = {
      {GroupKind::hyperbolic, 1, 1.5, 1e-6},
      {GroupKind::hyperbolic, 2, 2.5, 1e-6},
      {GroupKind::hyperbolic, 2, 1.3, 1e-6},
      {GroupKind::parabolic, 1, 3.0, 1e-2},
      {GroupKind::parabolic, 2, 3.0, 1e-2},
  };
  for (const Case& c : cases) {
    const Weight wt(c.n, c.lambda);
    const std::optional<QOperator> q =
        wt.m() >= 1 ? std::optional<QOperator>(QOperator::identity(c.kind)) : std::nullopt;
    const auto rows = l1_estimate(c.kind, wt, svals, 16, 4001, q);
    const std::string label = std::string(to_string(c.kind)) + " n=" + std::to_string(c.n) +
                              " lambda=" + fmt(c.lambda);
    double min_inc = rows.front().increment;
    double max_growth = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      min_inc = std::min(min_inc, rows[i].increment);
      max_growth = std::max(max_growth, rows[i].increment - rows[i - 1].increment);
    }
    out.push_back(make_check("l1", label + " monotone", min_inc, 0.0, ">="));
    out.push_back(make_check("l1", label + " increments decay", max_growth, 0.0));
    out.push_back(make_check("l1", label + " tail ratio S=20..40",
                             rows.back().increment / rows.back().estimate, c.tail_limit));
  }
  return out;
}

std::vector<CheckResult> suite_measure_scale() {
  std::vector<CheckResult> out;
  for (GroupKind kind :
       {GroupKind::elliptic, GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int n : {1, 2}) {
      const Weight wt(n, n + 0.5);
      OrbitGrid grid = kind == GroupKind::elliptic
                           ? orbit_grid(kind, n, 32, 0, 0.0)
                           : orbit_grid(kind, n, 8, 801, 20.0);
      std::vector<double> xi;
      if (kind != GroupKind::elliptic)
        for (int i = 0; i < 101; ++i) xi.push_back(-2.0 + 4.0 * i / 100.0);

      QuotientTable qs[2];
      int qi = 0;
      for (double scale : {1.0, 3.0}) {
        grid.weight_scale = scale;
        const FourierTable nu_hat =
            fourier_numeric(grid, nu_tilde_identity_on_grid(grid, wt), 4, xi);
        const FourierTable ker_hat =
            fourier_numeric(grid, phi_kernel_on_grid(grid, wt), 4, xi);
        qs[qi++] = spectral_quotient(nu_hat, ker_hat);
      }
      double worst = 0.0;
      for (std::size_t i = 0; i < qs[0].freqs.size(); ++i)
        if (qs[0].defined[i] && qs[1].defined[i])
          worst = std::max(worst, std::abs(qs[0].values[i] - qs[1].values[i]));
      out.push_back(make_check("measure-scale",
                               std::string(to_string(kind)) + " n=" + std::to_string(n) +
                                   " lambda=" + fmt(wt.lambda()),
                               worst, 1e-12));
    }
  }
  return out;
}

}  // namespace bergtoep
