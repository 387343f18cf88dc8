#include "bergtoep/kernel_series.hpp"

#include <cmath>

namespace bergtoep {

namespace {

double dbl_int_pow(double base, int e) {
  if (e >= 0) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
  }
  return 1.0 / dbl_int_pow(base, -e);
}

}  // namespace

ParabolicPowerSum::ParabolicPowerSum(cplx gamma, double beta, double mu0)
    : gamma_(gamma), beta_(beta), mu0_(mu0) {
  coef_[0] = 1.0;
}

ParabolicPowerSum ParabolicPowerSum::empty_like() const {
  ParabolicPowerSum out(gamma_, beta_, mu0_);
  out.coef_.clear();
  return out;
}

ParabolicPowerSum ParabolicPowerSum::derivative() const {
  // d/dy (gamma - i b y)^{-mu} = i b mu (gamma - i b y)^{-(mu+1)}
  ParabolicPowerSum out = empty_like();
  for (const auto& [j, c] : coef_) {
    const double mu = mu0_ + j;
    out.coef_[j + 1] += c * cplx(0.0, beta_ * mu);
  }
  return out;
}

ParabolicPowerSum ParabolicPowerSum::times_y() const {
  // y = -i gamma / b + (i / b) (gamma - i b y)
  ParabolicPowerSum out = empty_like();
  for (const auto& [j, c] : coef_) {
    out.coef_[j] += c * (cplx(0.0, -1.0) * gamma_ / beta_);
    out.coef_[j - 1] += c * cplx(0.0, 1.0 / beta_);
  }
  return out;
}

ParabolicPowerSum ParabolicPowerSum::one_plus_euler_over(double r) const {
  ParabolicPowerSum out = *this;
  out.add_scaled(derivative().times_y(), cplx(1.0 / r));
  return out;
}

ParabolicPowerSum& ParabolicPowerSum::add_scaled(const ParabolicPowerSum& other,
                                                 cplx scale) {
  for (const auto& [j, c] : other.coef_) coef_[j] += scale * c;
  return *this;
}

cplx ParabolicPowerSum::eval(double y) const {
  const cplx base = gamma_ - cplx(0.0, beta_ * y);
  const cplx lb = std::log(base);
  cplx acc{};
  for (const auto& [j, c] : coef_) acc += c * std::exp(-(mu0_ + j) * lb);
  return acc;
}

HyperbolicPowerSum::HyperbolicPowerSum(cplx w, double mu0) : w_(w), mu0_(mu0) {
  coef_[Key{0, 0, 0}] = 1.0;
}

HyperbolicPowerSum HyperbolicPowerSum::empty_like() const {
  HyperbolicPowerSum out(w_, mu0_);
  out.coef_.clear();
  return out;
}

HyperbolicPowerSum HyperbolicPowerSum::derivative() const {
  // T' = C^2, C' = -T C, (cosh s - w)' = sinh s = T / C
  HyperbolicPowerSum out = empty_like();
  for (const auto& [k, c] : coef_) {
    const double mu = mu0_ + k.shift;
    if (k.pow_t != 0)
      out.coef_[Key{k.shift, k.pow_t - 1, k.pow_c + 2}] += c * cplx(double(k.pow_t));
    if (k.pow_c != 0)
      out.coef_[Key{k.shift, k.pow_t + 1, k.pow_c}] += c * cplx(-double(k.pow_c));
    out.coef_[Key{k.shift + 1, k.pow_t + 1, k.pow_c - 1}] += c * cplx(-mu);
  }
  return out;
}

HyperbolicPowerSum HyperbolicPowerSum::times_tanh() const {
  HyperbolicPowerSum out = empty_like();
  for (const auto& [k, c] : coef_) out.coef_[Key{k.shift, k.pow_t + 1, k.pow_c}] += c;
  return out;
}

HyperbolicPowerSum HyperbolicPowerSum::one_plus_euler_over(double r) const {
  HyperbolicPowerSum out = *this;
  out.add_scaled(derivative().times_tanh(), cplx(1.0 / r));
  return out;
}

HyperbolicPowerSum& HyperbolicPowerSum::add_scaled(const HyperbolicPowerSum& other,
                                                   cplx scale) {
  for (const auto& [k, c] : other.coef_) coef_[k] += scale * c;
  return *this;
}

cplx HyperbolicPowerSum::eval(double s) const {
  const double T = std::tanh(s);
  const double C = 1.0 / std::cosh(s);
  const cplx base = cplx(std::cosh(s)) - w_;
  const cplx lb = std::log(base);
  cplx acc{};
  for (const auto& [k, c] : coef_)
    acc += c * dbl_int_pow(T, k.pow_t) * dbl_int_pow(C, k.pow_c) *
           std::exp(-(mu0_ + k.shift) * lb);
  return acc;
}

ParabolicPowerSum apply_ab(ParabolicPowerSum f, const Weight& wt) {
  for (int j = 0; j < 2 * wt.m(); ++j) f = f.one_plus_euler_over(wt.lambda() + j);
  return f;
}

HyperbolicPowerSum apply_ab(HyperbolicPowerSum f, const Weight& wt) {
  for (int j = 0; j < 2 * wt.m(); ++j) f = f.one_plus_euler_over(wt.lambda() + j);
  return f;
}

QOperator QOperator::identity(GroupKind kind) {
  QOperator q;
  q.kind = kind;
  return q;
}

bool QOperator::is_identity() const { return pcoef.empty() && hcoef.empty(); }

int QOperator::order() const {
  switch (kind) {
    case GroupKind::elliptic: return 0;
    case GroupKind::parabolic: return pcoef.empty() ? 0 : static_cast<int>(pcoef.size()) - 1;
    case GroupKind::hyperbolic: return hcoef.empty() ? 0 : static_cast<int>(hcoef.size()) - 1;
  }
  return 0;
}

ParabolicPowerSum apply(const QOperator& q, const ParabolicPowerSum& f) {
  if (q.kind != GroupKind::parabolic)
    throw std::invalid_argument("QOperator: kind mismatch");
  if (q.is_identity()) return f;
  ParabolicPowerSum out = f;
  out.add_scaled(f, cplx(-1.0));  // zero sum with matching base
  ParabolicPowerSum deriv = f;
  for (std::size_t k = 0; k < q.pcoef.size(); ++k) {
    ParabolicPowerSum term = deriv;
    for (std::size_t i = 0; i < k; ++i) term = term.times_y();
    out.add_scaled(term, q.pcoef[k]);
    deriv = deriv.derivative();
  }
  return out;
}

std::vector<double> tanh_derivative_poly(int j) {
  // tanh' = 1 - T^2; repeated differentiation stays polynomial in T
  std::vector<double> poly = {0.0, 1.0};  // T
  for (int d = 0; d < j; ++d) {
    // d/ds of sum a_i T^i = sum i a_i T^{i-1} (1 - T^2)
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) {
      next[i - 1] += i * poly[i];
      next[i + 1] -= i * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

HyperbolicPowerSum apply(const QOperator& q, const HyperbolicPowerSum& f) {
  if (q.kind != GroupKind::hyperbolic)
    throw std::invalid_argument("QOperator: kind mismatch");
  if (q.is_identity()) return f;
  HyperbolicPowerSum out = f;
  out.add_scaled(f, cplx(-1.0));  // zero sum with matching base
  HyperbolicPowerSum deriv = f;
  for (std::size_t k = 0; k < q.hcoef.size(); ++k) {
    HyperbolicPowerSum term = deriv;
    for (std::size_t i = 0; i < k; ++i) term = term.times_tanh();
    // a_k(s) = sum_j hcoef[k][j] tanh^{(j)}(s), acting by multiplication
    for (std::size_t jd = 0; jd < q.hcoef[k].size(); ++jd) {
      if (q.hcoef[k][jd] == cplx{}) continue;
      const std::vector<double> poly = tanh_derivative_poly(static_cast<int>(jd));
      HyperbolicPowerSum powt = term;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] != 0.0) out.add_scaled(powt, q.hcoef[k][jd] * poly[i]);
        powt = powt.times_tanh();
      }
    }
    deriv = deriv.derivative();
  }
  return out;
}

}  // namespace bergtoep
