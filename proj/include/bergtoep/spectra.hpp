#pragma once

#include <optional>

#include "bergtoep/kernel_series.hpp"
#include "bergtoep/toeplitz.hpp"

namespace bergtoep {

struct NumericGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Frequency index: a torus lattice vector and, for the parabolic/hyperbolic
/// orbits, a line frequency.
struct Freq {
  std::vector<int> k;
  bool has_xi = false;
  double xi = 0.0;

  friend bool operator==(const Freq& a, const Freq& b) {
    return a.k == b.k && a.has_xi == b.has_xi && (!a.has_xi || a.xi == b.xi);
  }
  friend bool operator<(const Freq& a, const Freq& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.has_xi != b.has_xi) return b.has_xi;
    return a.xi < b.xi;
  }
};

struct FourierTable {
  std::vector<Freq> freqs;
  std::vector<cplx> coeffs;
  std::vector<char> support;  // |coeff| > support_eps * max |coeff|
  double support_eps = 1e-12;
  bool aliasing_warning = false;

  void compute_support();
  std::optional<cplx> at(const Freq& f) const;
  std::optional<std::size_t> index_of(const Freq& f) const;
};

/// Convolution kernel on the orbit: elliptic (1 - avg(t))^{-lambda} with
/// avg(t) = sum t_i / (2n); parabolic Q AB (1 - (i/2) y - w)^{-lambda} and
/// hyperbolic Q AB (cosh s - w)^{-lambda} with w the (n-1)-circle average.
/// For m >= 1 a QOperator must be supplied (identity is an explicit choice);
/// nullopt is accepted only when m = 0.
cplx phi_kernel(GroupKind kind, const std::vector<cplx>& torus, double line,
                const Weight& wt, const std::optional<QOperator>& q = std::nullopt);

std::vector<cplx> phi_kernel_on_grid(const OrbitGrid& grid, const Weight& wt,
                                     const std::optional<QOperator>& q = std::nullopt,
                                     Exec exec = Exec::parallel);

/// hat(phi_E)(r) = Gamma(lambda+|r|) / (Gamma(lambda) r! (2n)^{|r|}) = 1/(h_r (2n)^{|r|}).
double fourier_elliptic_closed(const MultiIndex& r, const Weight& wt);

/// Table of the closed-form elliptic kernel transform on {r >= 0, |r| <= D}.
FourierTable fourier_elliptic_closed_table(const Weight& wt, int max_degree);

/// Discrete transform of grid samples: exact discrete Fourier coefficients on
/// each torus circle (aliasing flagged past M/2) and a quadrature transform
/// integral over [-S, S] per requested line frequency.
FourierTable fourier_numeric(const OrbitGrid& grid, const std::vector<cplx>& values,
                             int max_torus_degree, const std::vector<double>& xi_grid,
                             Exec exec = Exec::parallel);

/// Closed-form table of conj-free nu~ for an elliptic-invariant symbol:
/// coefficient (2n)^{-|r|} mu_r / h_r^2 at each lattice r with |r| <= D, where
/// mu_r = <phi z^r, z^r>.
FourierTable nu_elliptic(const SymbolExpr& phi, const Weight& wt, int max_degree);

/// nu~ sampled on the orbit grid for phi = 1 through the reproducing kernel,
/// valid at m = 0: value D~(h) * K_{z0}(h.z0).
std::vector<cplx> nu_tilde_identity_on_grid(const OrbitGrid& grid, const Weight& wt,
                                            Exec exec = Exec::parallel);

/// nu~ on the orbit grid for a general symbol by ball quadrature of
/// D~(h) * int phi K_{z0} conj(K_{h.z0}) d mu_lambda; lambda > n only.
std::vector<cplx> nu_tilde_quadrature_on_grid(const SymbolExpr& phi,
                                              const OrbitGrid& grid, const Weight& wt,
                                              const QuadratureSpec& spec,
                                              Exec exec = Exec::parallel);

struct QuotientTable {
  std::vector<Freq> freqs;
  std::vector<cplx> values;
  std::vector<char> defined;  // off the denominator support -> undefined
};

/// Pointwise nu / denom on the denominator's support; frequencies off the
/// support are reported as undefined, not zero.
QuotientTable spectral_quotient(const FourierTable& nu, const FourierTable& denom);

/// Fourier-side application of RR*: multiply by the kernel transform.
FourierTable rr_star_apply(const FourierTable& f, const FourierTable& kernel_hat);
/// Elliptic closed-form multiplier (zero off the non-negative lattice).
FourierTable rr_star_apply(const FourierTable& f, const Weight& wt);

/// sqrt of the RR* multiplier on the support; complex or negative multipliers
/// beyond tolerance raise NumericGuardError rather than being absolute-valued.
FourierTable sqrt_rr_star_multiplier(const FourierTable& kernel_hat,
                                     double tol = 1e-10);

struct L1Row {
  double S;
  double estimate;
  double increment;
};

/// L1 mass of the kernel over T^{n-1} x [-S, S] for each requested halfwidth,
/// on a shared grid (nested truncations, so the sequence is monotone).
std::vector<L1Row> l1_estimate(GroupKind kind, const Weight& wt,
                               const std::vector<double>& s_values, int torus_nodes,
                               int line_nodes,
                               const std::optional<QOperator>& q = std::nullopt);

}  // namespace bergtoep
