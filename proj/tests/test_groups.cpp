#include <doctest.h>

#include <cmath>

#include "bergtoep/groups.hpp"
#include "bergtoep/rng.hpp"

using namespace bergtoep;

namespace {
constexpr double kPi = 3.14159265358979323846;

double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}
}  // namespace

TEST_CASE("element validation") {
  CHECK_NOTHROW(make_element(GroupKind::elliptic, 1, {cplx(0.0, 1.0)}, 0.0, -0.125));
  // cover constraint violated
  CHECK_THROWS_AS(make_element(GroupKind::elliptic, 1, {cplx(0.0, 1.0)}, 0.0, 0.0),
                  std::invalid_argument);
  // torus entry off the circle
  CHECK_THROWS_AS(make_element(GroupKind::elliptic, 1, {cplx(0.5)}, 0.0, 0.0),
                  std::invalid_argument);
  // elliptic elements carry no line coordinate
  CHECK_THROWS_AS(make_element(GroupKind::elliptic, 1, {cplx(1.0)}, 0.3, 0.0),
                  std::invalid_argument);
  // hyperbolic n=1 has an empty torus
  CHECK_NOTHROW(make_element(GroupKind::hyperbolic, 1, {}, 1.3, 0.0));
  CHECK_NOTHROW(make_element(GroupKind::parabolic, 1, {}, -0.4, 0.5));
}

TEST_CASE("cayley transform") {
  const Point image = cayley({cplx(0.0), cplx(0.0)});
  CHECK(std::abs(image[0]) <= 1e-15);
  CHECK(std::abs(image[1] - cplx(0.0, 1.0)) <= 1e-15);

  CHECK(std::abs(cayley({cplx(0.5)})[0] - cplx(0.0, 1.0 / 3.0)) <= 1e-15);

  std::mt19937_64 gen(47);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(gen() % 3);
    const Point z = random_ball_point(n, 0.95, gen);
    const Point w = cayley(z);
    double wp = 0.0;
    for (int c = 0; c + 1 < n; ++c) wp += std::norm(w[c]);
    CHECK(w.back().imag() - wp > 0.0);
    CHECK(dist(cayley_inv(w), z) <= 1e-13);
  }
  CHECK_THROWS_AS(cayley_inv({cplx(0.0), cplx(0.0, -1.0)}), std::domain_error);
}

TEST_CASE("ball actions") {
  std::mt19937_64 gen(53);
  for (GroupKind kind : {GroupKind::elliptic, GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int n : {1, 2, 3}) {
      const Point z = random_ball_point(n, 0.8, gen);
      CHECK(dist(act(identity_element(kind, n), z), z) <= 1e-15);
    }
  }

  const GroupElement rot =
      make_element(GroupKind::elliptic, 2, {cplx(0.0, 1.0), cplx(0.0, -1.0)}, 0.0, 0.0);
  const Point moved = act(rot, {cplx(0.3), cplx(0.4)});
  CHECK(std::abs(moved[0] - cplx(0.0, 0.3)) <= 1e-15);
  CHECK(std::abs(moved[1] - cplx(0.0, -0.4)) <= 1e-15);

  // hyperbolic orbit of the base point
  const GroupElement boost = make_element(GroupKind::hyperbolic, 2, {cplx(1.0)}, 1.0, 0.0);
  const Point z0 = base_point(GroupKind::hyperbolic, 2);
  const Point hz0 = act(boost, z0);
  CHECK(std::abs(hz0[0] - z0[0] / std::cosh(1.0)) <= 1e-15);
  CHECK(std::abs(hz0[1] - cplx(std::tanh(1.0))) <= 1e-15);
  CHECK(std::abs(hz0[0].real() - 1.0 / (std::sqrt(2.0) * 1.5430806348152437)) <= 1e-14);
  CHECK(std::abs(hz0[1].real() - 0.76159415595576488) <= 1e-14);
}

TEST_CASE("ball action matches the Siegel model through the Cayley transform") {
  std::mt19937_64 gen(59);
  for (GroupKind kind : {GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int n : {1, 2, 3}) {
      for (int i = 0; i < 200; ++i) {
        const GroupElement g = random_element(kind, n, gen, 1.5);
        const Point z = random_ball_point(n, 0.8, gen);
        const Point via_ball = cayley(act(g, z));
        const Point via_siegel = act_siegel(g, cayley(z));
        CHECK(dist(via_ball, via_siegel) <= 1e-12);
      }
    }
  }
}

TEST_CASE("group law and ball preservation") {
  std::mt19937_64 gen(61);
  for (GroupKind kind : {GroupKind::elliptic, GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int i = 0; i < 2500; ++i) {
      const int n = 1 + static_cast<int>(gen() % 3);
      const GroupElement g1 = random_element(kind, n, gen, 1.5);
      const GroupElement g2 = random_element(kind, n, gen, 1.5);
      const Point z = random_ball_point(n, 0.9, gen);
      CHECK(abs_sq(act(g1, z)) < 1.0);
      CHECK(dist(act(g1, act(g2, z)), act(compose(g1, g2), z)) <= 1e-12);
      const GroupElement e = compose(g1, inverse(g1));
      CHECK(dist(act(e, z), z) <= 1e-12);
    }
  }
}

TEST_CASE("cocycle values") {
  const Weight w2(2, 1.5);
  CHECK(std::abs(d_lambda(identity_element(GroupKind::elliptic, 2), w2) - cplx(1.0)) <=
        1e-15);
  CHECK(std::abs(d_lambda(identity_element(GroupKind::parabolic, 2), w2) - cplx(1.0)) <=
        1e-15);

  const GroupElement h = make_element(GroupKind::hyperbolic, 1, {}, 1.0, 0.1);
  const Weight wt(1, 2.0);
  const cplx expected =
      std::polar(1.0, -0.4 * kPi) * std::pow(std::cosh(1.0), -2.0);
  CHECK(std::abs(d_lambda(h, wt) - expected) <= 1e-15);
  CHECK(std::abs(d_lambda(h, wt)) == doctest::Approx(0.41997434161402614).epsilon(1e-13));
}

TEST_CASE("cocycle multiplicativity where the closed forms compose") {
  std::mt19937_64 gen(67);
  const Weight wt(2, 1.7);
  for (int i = 0; i < 300; ++i) {
    const GroupElement g1 = random_element(GroupKind::elliptic, 2, gen);
    const GroupElement g2 = random_element(GroupKind::elliptic, 2, gen);
    const cplx lhs = d_lambda(compose(g1, g2), wt);
    const cplx rhs = d_lambda(g1, wt) * d_lambda(g2, wt);
    CHECK(std::abs(lhs - rhs) <= 1e-13);
  }
  for (GroupKind kind : {GroupKind::parabolic, GroupKind::hyperbolic}) {
    for (int i = 0; i < 300; ++i) {
      const GroupElement g = random_element(kind, 2, gen, 1.5);
      GroupElement k = random_element(kind, 2, gen, 0.0);  // line = 0
      const cplx lhs = d_lambda(compose(g, k), wt);
      const cplx rhs = d_lambda(g, wt) * d_lambda(k, wt);
      CHECK(std::abs(lhs - rhs) <= 1e-13);
      CHECK(std::abs(std::abs(lhs) - std::abs(rhs)) <= 1e-13);
    }
  }
}

TEST_CASE("stabilizer character") {
  const Weight wt(2, 1.5);
  std::mt19937_64 gen(71);

  const GroupElement id = identity_element(GroupKind::elliptic, 2);
  const GroupElement h = random_element(GroupKind::elliptic, 2, gen);
  CHECK(chi_lambda_residual(h, id, wt) <= 1e-15);

  const GroupElement k =
      make_element(GroupKind::elliptic, 2, {cplx(1.0), cplx(1.0)}, 0.0, 1.0 / 3.0);
  CHECK(chi_lambda_residual(h, k, wt) <= 1e-13);

  const Weight w1(1, 0.7);
  const GroupElement h1 = make_element(GroupKind::elliptic, 1, {cplx(-1.0)}, 0.0, 0.25);
  const GroupElement k1 = make_element(GroupKind::elliptic, 1, {cplx(1.0)}, 0.0, 0.5);
  CHECK(chi_lambda_residual(h1, k1, w1) <= 1e-13);

  CHECK_THROWS_AS(chi_lambda(h1, w1), std::invalid_argument);
}

TEST_CASE("orbit grids") {
  const OrbitGrid e1 = orbit_grid(GroupKind::elliptic, 1, 8, 0, 0.0);
  CHECK(e1.size() == 8);
  CHECK(e1.node_weight() == doctest::Approx(0.125).epsilon(1e-15));

  const OrbitGrid h2 = orbit_grid(GroupKind::hyperbolic, 2, 4, 3, 5.0);
  CHECK(h2.size() == 12);
  CHECK(h2.node_weight() == doctest::Approx(0.25 * 10.0 / 3.0).epsilon(1e-15));
  CHECK(h2.line_at(0) == doctest::Approx(-5.0 + 10.0 / 6.0));
  CHECK(h2.line_at(2) == doctest::Approx(5.0 - 10.0 / 6.0));

  const OrbitGrid p3 = orbit_grid(GroupKind::parabolic, 3, 6, 101, 40.0);
  CHECK(p3.size() == 36 * 101);

  // torus nodes enumerate the M-th roots of unity
  const std::vector<cplx> t = h2.torus_at(3);
  CHECK(t.size() == 1);
  CHECK(std::abs(t[0] - std::polar(1.0, 2.0 * kPi * 3.0 / 4.0)) <= 1e-15);
}
