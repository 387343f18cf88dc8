#include <doctest.h>

#include <cmath>

#include "bergtoep/checks.hpp"
#include "bergtoep/rng.hpp"
#include "bergtoep/symbols.hpp"

using namespace bergtoep;

namespace {

SymbolExpr mod_sq(int n, int axis) {
  MultiIndex e(n, 0);
  e[axis] = 1;
  return SymbolExpr(n, {{1.0, e, e, 0}});
}

}  // namespace

TEST_CASE("symbol evaluation") {
  CHECK(SymbolExpr::constant(2, 1.0).eval({cplx(0.1), cplx(0.2)}) == cplx(1.0));
  CHECK(mod_sq(1, 0).eval({cplx(0.5)}) == doctest::Approx(0.25).epsilon(1e-15));
  const SymbolExpr radial(2, {{1.0, {0, 0}, {0, 0}, 1}});
  CHECK(radial.eval({cplx(0.6), cplx(0.0)}).real() ==
        doctest::Approx(0.64).epsilon(1e-15));
  CHECK_THROWS_AS(radial.eval({cplx(0.1)}), std::invalid_argument);
}

TEST_CASE("evaluation is linear in the coefficients") {
  std::mt19937_64 gen(31);
  const SymbolExpr phi = mod_sq(2, 0);
  const SymbolExpr psi(2, {{1.0, {1, 0}, {0, 1}, 1}});
  const cplx alpha{0.7, -0.3}, beta{-1.1, 0.2};
  std::vector<SymbolTerm> combined;
  for (SymbolTerm t : phi.terms()) {
    t.c *= alpha;
    combined.push_back(t);
  }
  for (SymbolTerm t : psi.terms()) {
    t.c *= beta;
    combined.push_back(t);
  }
  const SymbolExpr mix(2, combined);
  for (int i = 0; i < 100; ++i) {
    const Point z = random_ball_point(2, 0.9, gen);
    const cplx lhs = mix.eval(z);
    const cplx rhs = alpha * phi.eval(z) + beta * psi.eval(z);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("canonicalization merges and is idempotent") {
  const SymbolExpr split(1, {{cplx(0.25), {1}, {1}, 0},
                             {cplx(0.75), {1}, {1}, 0},
                             {cplx(2.0), {0}, {0}, 1},
                             {cplx(-2.0), {0}, {0}, 1}});
  CHECK(split.terms().size() == 1);
  CHECK(split.terms()[0].c == cplx(1.0));
  const SymbolExpr again(split.n(), split.terms());
  CHECK(again.canonical_key() == split.canonical_key());
  CHECK(again.hash() == split.hash());

  std::mt19937_64 gen(37);
  for (int i = 0; i < 1000; ++i) {
    const Point z = random_ball_point(1, 0.9, gen);
    CHECK(std::abs(split.eval(z) - mod_sq(1, 0).eval(z)) <= 1e-14);
  }

  // total cancellation leaves the canonical zero symbol
  const SymbolExpr zero(1, {{cplx(1.0), {1}, {0}, 0}, {cplx(-1.0), {1}, {0}, 0}});
  CHECK(zero.terms().size() == 1);
  CHECK(zero.terms()[0].c == cplx(0.0));
}

TEST_CASE("elliptic invariance classifier") {
  const SymbolExpr inv(2, {{1.0, {1, 0}, {1, 0}, 1}});
  CHECK(is_elliptic_invariant(inv));
  const SymbolExpr reup(1, {{1.0, {1}, {0}, 0}, {1.0, {0}, {1}, 0}});
  CHECK_FALSE(is_elliptic_invariant(reup));
  const SymbolExpr cross(2, {{1.0, {1, 0}, {0, 1}, 0}});
  CHECK_FALSE(is_elliptic_invariant(cross));
  // sampling witness: the (1,-1) torus point flips the sign of z1 conj(z2)
  const Point z{cplx(0.3), cplx(0.4)};
  const Point flipped{cplx(0.3), cplx(-0.4)};
  CHECK(std::abs(cross.eval(flipped) + cross.eval(z)) <= 1e-15);
  CHECK(invariance_residual(cross, GroupKind::elliptic, 200, 3) > 1e-6);
}

TEST_CASE("classifier agrees with the sampling residual on a corpus") {
  for (int n : {1, 2}) {
    for (const SymbolExpr& phi : invariant_corpus(n)) {
      CHECK(is_elliptic_invariant(phi));
      CHECK(invariance_residual(phi, GroupKind::elliptic, 1000, 99) <= 1e-12);
    }
    std::mt19937_64 gen(41);
    int noninvariant_seen = 0;
    for (int i = 0; i < 10; ++i) {
      const SymbolExpr phi = random_symbol(n, gen);
      if (is_elliptic_invariant(phi)) continue;
      ++noninvariant_seen;
      CHECK(invariance_residual(phi, GroupKind::elliptic, 1000, 99) > 1e-6);
    }
    CHECK(noninvariant_seen > 0);
  }
}

TEST_CASE("invariance residual per group") {
  const SymbolExpr one = SymbolExpr::constant(2, 1.0);
  CHECK(invariance_residual(one, GroupKind::elliptic, 50, 1) == 0.0);
  CHECK(invariance_residual(one, GroupKind::parabolic, 50, 1) <= 1e-14);
  CHECK(invariance_residual(one, GroupKind::hyperbolic, 50, 1) <= 1e-14);

  CHECK(invariance_residual(mod_sq(2, 0), GroupKind::elliptic, 100, 2) <= 1e-14);
  CHECK(invariance_residual(mod_sq(1, 0), GroupKind::hyperbolic, 100, 7) > 0.01);
}

TEST_CASE("torus transform") {
  std::mt19937_64 gen(43);
  const SymbolExpr phi(2, {{cplx(1.0, -0.5), {2, 0}, {0, 1}, 1}, {1.0, {1, 1}, {1, 1}, 0}});
  for (int i = 0; i < 50; ++i) {
    const std::vector<cplx> t = {random_unit(gen), random_unit(gen)};
    const SymbolExpr phit = torus_transform(phi, t);
    const Point z = random_ball_point(2, 0.9, gen);
    const Point tz_inv{std::conj(t[0]) * z[0], std::conj(t[1]) * z[1]};
    CHECK(std::abs(phit.eval(z) - phi.eval(tz_inv)) <= 1e-14 * (1.0 + std::abs(phi.eval(tz_inv))));
  }
}

TEST_CASE("real-valuedness detector") {
  CHECK(is_real_valued(mod_sq(1, 0)));
  const SymbolExpr reup(1, {{1.0, {1}, {0}, 0}, {1.0, {0}, {1}, 0}});
  CHECK(is_real_valued(reup));
  const SymbolExpr holo(1, {{1.0, {1}, {0}, 0}});
  CHECK_FALSE(is_real_valued(holo));
  const SymbolExpr twisted(1, {{cplx(0.0, 1.0), {1}, {0}, 0}, {cplx(0.0, -1.0), {0}, {1}, 0}});
  CHECK(is_real_valued(twisted));
}

TEST_CASE("hashes separate distinct symbols") {
  CHECK(mod_sq(1, 0).hash() != SymbolExpr::constant(1, 1.0).hash());
  CHECK(mod_sq(2, 0).hash() != mod_sq(2, 1).hash());
}
