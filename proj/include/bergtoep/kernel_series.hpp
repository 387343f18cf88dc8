#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bergtoep/groups.hpp"

namespace bergtoep {

/// Finite sum  sum_j coef[j] * (gamma - i*beta*y)^{-(mu0+j)}.
/// Closed under d/dy, multiplication by y, and the Euler operator y d/dy, so
/// the continuation factors and any polynomial differential operator act
/// symbolically with no discretization error.
class ParabolicPowerSum {
 public:
  ParabolicPowerSum(cplx gamma, double beta, double mu0);

  ParabolicPowerSum derivative() const;
  ParabolicPowerSum times_y() const;
  /// f + (1/r) y f'
  ParabolicPowerSum one_plus_euler_over(double r) const;

  ParabolicPowerSum& add_scaled(const ParabolicPowerSum& other, cplx scale);
  cplx eval(double y) const;
  const std::map<int, cplx>& coef() const { return coef_; }
  double mu0() const { return mu0_; }

 private:
  ParabolicPowerSum empty_like() const;
  cplx gamma_;
  double beta_;
  double mu0_;
  std::map<int, cplx> coef_;
};

/// Finite sum  sum c * tanh(s)^pt * sech(s)^pc * (cosh s - w)^{-(mu0+shift)}
/// with integer pc of either sign.  Closed under d/ds, multiplication by
/// tanh, and N = tanh(s) d/ds.
class HyperbolicPowerSum {
 public:
  struct Key {
    int shift;
    int pow_t;
    int pow_c;
    auto operator<=>(const Key&) const = default;
  };

  HyperbolicPowerSum(cplx w, double mu0);

  HyperbolicPowerSum derivative() const;
  HyperbolicPowerSum times_tanh() const;
  HyperbolicPowerSum one_plus_euler_over(double r) const;

  HyperbolicPowerSum& add_scaled(const HyperbolicPowerSum& other, cplx scale);
  cplx eval(double s) const;
  const std::map<Key, cplx>& coef() const { return coef_; }

 private:
  HyperbolicPowerSum empty_like() const;
  cplx w_;
  double mu0_;
  std::map<Key, cplx> coef_;
};

/// apply the 2m continuation factors (I + N/(lambda+j)), j = 0..2m-1
ParabolicPowerSum apply_ab(ParabolicPowerSum f, const Weight& wt);
HyperbolicPowerSum apply_ab(HyperbolicPowerSum f, const Weight& wt);

/// User-supplied polynomial differential operator on the orbit line factor.
/// Identity for the elliptic family.  Parabolic: sum_k pcoef[k] y^k d^k/dy^k.
/// Hyperbolic: sum_k a_k(s) tanh(s)^k d^k/ds^k with
/// a_k(s) = sum_j hcoef[k][j] tanh^{(j)}(s)  (j-th derivative, j = 0 is tanh).
struct QOperator {
  GroupKind kind = GroupKind::elliptic;
  std::vector<cplx> pcoef;
  std::vector<std::vector<cplx>> hcoef;

  static QOperator identity(GroupKind kind);
  bool is_identity() const;
  int order() const;
};

ParabolicPowerSum apply(const QOperator& q, const ParabolicPowerSum& f);
HyperbolicPowerSum apply(const QOperator& q, const HyperbolicPowerSum& f);

/// Coefficients of tanh^{(j)} as a polynomial in tanh (exact integers).
std::vector<double> tanh_derivative_poly(int j);

}  // namespace bergtoep
