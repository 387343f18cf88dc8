#include <doctest.h>

#include <cmath>

#include "bergtoep/bergman.hpp"
#include "bergtoep/groups.hpp"
#include "bergtoep/rng.hpp"
#include "reference.hpp"

using namespace bergtoep;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("monomial norms") {
  CHECK(norm_sq({0, 0}, Weight(2, 1.7)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm_sq({2}, Weight(1, 3.0)) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(norm_sq({1, 2}, Weight(2, 1.5)) ==
        doctest::Approx(2.0 / 13.125).epsilon(1e-13));
}

TEST_CASE("norm oracle: radial quadrature over the disk") {
  // h_2 at lambda = 3, n = 1: int |z^2|^2 dmu_3 over u = |z|^2 reduces to
  // 2 * int_0^1 u^2 (1-u) du
  const double oracle =
      2.0 * ref::midpoint01([](double u) { return u * u * (1.0 - u); }, 20000);
  CHECK(std::abs(oracle - norm_sq({2}, Weight(1, 3.0))) <= 1e-8);
}

TEST_CASE("norms decrease along rays for lambda > 1") {
  const Weight wt(1, 3.0);
  for (int k = 0; k < 50; ++k) CHECK(norm_sq({k + 1}, wt) < norm_sq({k}, wt));
}

TEST_CASE("kernel evaluation") {
  const Weight wt(1, 2.5);
  CHECK(kernel_eval({cplx(0.3, 0.2)}, {cplx(0.0)}, wt) == cplx(1.0));
  CHECK(kernel_eval({cplx(0.5)}, {cplx(0.5)}, Weight(1, 3.0 - 1.0)).real() ==
        doctest::Approx(16.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(kernel_eval({cplx(1.2)}, {cplx(0.0)}, wt), std::domain_error);
}

TEST_CASE("kernel equals its monomial series") {
  // independent oracle: (1-x)^{-lambda} = sum (lambda)_k x^k / k!
  const Weight wt(1, 0.7);
  const cplx x = cplx(0.3) * std::conj(cplx(0.4));
  cplx series{};
  double coeff = 1.0;  // (lambda)_k / k!
  cplx xk{1.0};
  for (int k = 0; k <= 60; ++k) {
    series += coeff * xk;
    coeff *= (0.7 + k) / (k + 1.0);
    xk *= x;
  }
  const cplx closed = kernel_eval({cplx(0.3)}, {cplx(0.4)}, wt);
  CHECK(std::abs(closed - series) <= 1e-10);
  CHECK(std::abs(closed - kernel_eval_truncated({cplx(0.3)}, {cplx(0.4)}, wt, 60)) <= 1e-10);
}

TEST_CASE("kernel hermitian symmetry") {
  std::mt19937_64 gen(23);
  const Weight wt(2, 1.6);
  for (int i = 0; i < 100; ++i) {
    const Point z = random_ball_point(2, 0.95, gen);
    const Point w = random_ball_point(2, 0.95, gen);
    CHECK(std::abs(kernel_eval(z, w, wt) - std::conj(kernel_eval(w, z, wt))) <= 1e-14 *
              std::abs(kernel_eval(z, w, wt)));
  }
}

TEST_CASE("reproducing property on polynomials") {
  // <f, K_w> computed coefficientwise against the monomial Gram equals f(w)
  const Weight wt(2, 1.3);
  std::mt19937_64 gen(29);
  const auto basis = enumerate_basis(2, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> coeffs;
    for (std::size_t i = 0; i < basis.size(); ++i)
      coeffs.push_back({uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)});
    const Point w = random_ball_point(2, 0.7, gen);
    cplx inner{};
    cplx direct{};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      cplx wr{1.0};
      for (int c = 0; c < 2; ++c)
        for (int q = 0; q < basis[i][c]; ++q) wr *= w[c];
      // K_w expansion coefficient on z^r is conj(w^r)/h_r
      const double h = norm_sq(basis[i], wt);
      inner += coeffs[i] * std::conj(std::conj(wr) / h) * h;
      direct += coeffs[i] * wr;
    }
    CHECK(std::abs(inner - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("continuation factor eigenvalues") {
  CHECK(ab_eigenvalue(5, Weight(2, 5.0)) == 1.0);
  CHECK(ab_eigenvalue(3, Weight(2, 1.5)) == doctest::Approx(6.6).epsilon(1e-14));
  CHECK(ab_eigenvalue(1, Weight(1, 0.3)) == doctest::Approx(23.0 / 3.0).epsilon(1e-14));
  const ABFactors f(Weight(2, 1.5));
  CHECK(f.a_eig(3) == doctest::Approx(5.5 / 2.5).epsilon(1e-15));
  CHECK(f.b_eig(3) == doctest::Approx(4.5 / 1.5).epsilon(1e-15));
}

TEST_CASE("gram consistency") {
  CHECK(gram_consistency_residual({0}, Weight(1, 0.5)) == 0.0);
  CHECK(gram_consistency_residual({4}, Weight(1, 0.5)) <= 1e-12);
  const Weight wt(2, 1.5);
  CHECK(gram_consistency_residual({1, 2}, wt) <= 1e-12);
  CHECK(ab_eigenvalue(3, wt) * norm_sq({1, 2}, wt.shifted()) ==
        doctest::Approx(0.15238095238095238).epsilon(1e-12));

  for (int n : {1, 2, 3})
    for (double lambda : {0.3, 0.7, 1.5, 2.5})
      for (const MultiIndex& r : enumerate_basis(n, 10))
        CHECK(gram_consistency_residual(r, Weight(n, lambda)) <= 1e-10);
}

TEST_CASE("coherent state covariance under the torus") {
  const GroupElement id = identity_element(GroupKind::elliptic, 1);
  CHECK(coherent_covariance_residual(id, {cplx(0.4)}, Weight(1, 3.0), 25) <= 1e-13);

  const GroupElement g1 =
      make_element(GroupKind::elliptic, 1, {cplx(0.0, 1.0)}, 0.0, -0.125);
  CHECK(coherent_covariance_residual(g1, {cplx(0.4)}, Weight(1, 3.0), 40) <= 1e-9);

  const GroupElement g2 = make_element(
      GroupKind::elliptic, 2, {cplx(0.0, 1.0), cplx(-1.0, 0.0)}, 0.0, 1.0 / 12.0);
  CHECK(coherent_covariance_residual(g2, {cplx(0.3), cplx(0.2)}, Weight(2, 4.0), 30) <=
        1e-8);

  // tightening with the truncation degree
  const double coarse = coherent_covariance_residual(g1, {cplx(0.55)}, Weight(1, 2.5), 6);
  const double fine = coherent_covariance_residual(g1, {cplx(0.55)}, Weight(1, 2.5), 24);
  CHECK(fine < coarse);

  const GroupElement par = identity_element(GroupKind::parabolic, 2);
  CHECK_THROWS_AS(coherent_covariance_residual(par, {cplx(0.1), cplx(0.0)}, Weight(2, 3.5), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(coherent_covariance_residual(g1, {cplx(0.4)}, Weight(1, 0.5), 10),
                  std::domain_error);
}

TEST_CASE("normalization constant of the measure") {
  // int 1 dmu_lambda = 1 via the radial reduction, n = 1
  const double lambda = 2.4;
  const double c = std::exp(log_gamma(lambda) - std::log(kPi) - log_gamma(lambda - 1.0));
  const double radial = ref::midpoint01(
      [&](double u) { return std::pow(1.0 - u, lambda - 2.0); }, 200000);
  CHECK(c * kPi * radial == doctest::Approx(1.0).epsilon(1e-6));
}
