#pragma once

#include <functional>
#include <utility>

#include "bergtoep/linalg.hpp"
#include "bergtoep/quadrature.hpp"
#include "bergtoep/symbols.hpp"

namespace bergtoep {

/// Truncated Toeplitz (or representation) matrix over the normalized monomial
/// basis e_r = z^r / sqrt(h_r); entry(i, j) = <phi e_{r_j}, e_{r_i}>.
struct OperatorMatrix {
  std::vector<MultiIndex> basis;
  CMatrix entries;
  Weight weight;
  std::uint64_t symbol_hash = 0;
};

/// <phi e_s, e_r> in closed form, meromorphically continued in lambda: the
/// only surviving terms have s + a = r + b, each contributing
/// c * alpha! * Gamma(lambda) * (lambda-n)_p / Gamma(lambda+p+|alpha|) with
/// alpha = s + a, normalized by sqrt(h_r h_s).
cplx entry_closed_form(const SymbolExpr& phi, const MultiIndex& r,
                       const MultiIndex& s, const Weight& wt);

struct EntryQuadratureResult {
  cplx value;
  double error_estimate;
};

/// <phi e_s, e_r> by tensor quadrature, lambda > n only; the error estimate
/// comes from node doubling.
EntryQuadratureResult entry_quadrature(const std::function<cplx(const Point&)>& phi,
                                       const MultiIndex& r, const MultiIndex& s,
                                       const Weight& wt, const QuadratureSpec& spec,
                                       Exec exec = Exec::parallel);

OperatorMatrix assemble(const SymbolExpr& phi, const Weight& wt, int max_degree,
                        Exec exec = Exec::parallel,
                        std::size_t max_basis = kDefaultMaxBasis);

/// r -> entry_closed_form(phi, r, r); requires an elliptic-invariant symbol.
std::vector<std::pair<MultiIndex, cplx>> diagonal_spectrum(const SymbolExpr& phi,
                                                           const Weight& wt,
                                                           int max_degree);

/// Frobenius norm of AB - BA.
double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b,
                       Exec exec = Exec::parallel);

/// pi_lambda(t, x) on the truncated basis: the diagonal unitary with entry
/// e^{2 pi i lambda x} t^{-r} on e_r.
OperatorMatrix torus_rep_matrix(const GroupElement& g, const Weight& wt,
                                int max_degree);

/// Frobenius norm of pi(g) T_phi - T_{phi_g} pi(g) on the truncation.
double intertwine_residual(const SymbolExpr& phi, const GroupElement& g,
                           const Weight& wt, int max_degree,
                           Exec exec = Exec::parallel);

/// Largest eigenvalue modulus of the truncated matrix.
double spectral_radius(const OperatorMatrix& a);

}  // namespace bergtoep
