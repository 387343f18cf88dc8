#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bergtoep/groups.hpp"

namespace bergtoep {

/// One term  c * z^a * conj(z)^b * (1 - |z|^2)^p.
struct SymbolTerm {
  cplx c;
  MultiIndex a;
  MultiIndex b;
  int p = 0;
};

/// Finite sum of terms over a fixed dimension, kept in canonical form: terms
/// sorted by (a, b, p), equal keys merged, exact-zero coefficients dropped
/// (a single zero constant survives if everything cancels).
class SymbolExpr {
 public:
  SymbolExpr(int n, std::vector<SymbolTerm> terms);

  int n() const { return n_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }

  cplx eval(const Point& z) const;

  static SymbolExpr constant(int n, cplx c);

  std::string canonical_key() const;
  std::uint64_t hash() const;

  int max_a_degree() const;
  int max_b_degree() const;

 private:
  int n_;
  std::vector<SymbolTerm> terms_;
};

/// True iff every canonical term has a == b; within this symbol class that is
/// equivalent to invariance under the full torus action.
bool is_elliptic_invariant(const SymbolExpr& phi);

/// True iff the term multiset is closed under (a,b,p,c) -> (b,a,p,conj c).
bool is_real_valued(const SymbolExpr& phi);

/// phi_t(z) = phi(t^{-1} z): per-term coefficient times t^{b-a}.
SymbolExpr torus_transform(const SymbolExpr& phi, const std::vector<cplx>& t);

/// max over sampled (h, z) of |phi(h^{-1}.z) - phi(z)|; z uniform on the ball
/// of radius 0.9, h uniform in the lifted group with |line| <= 2.
double invariance_residual(const SymbolExpr& phi, GroupKind kind, int samples,
                           std::uint64_t seed);

}  // namespace bergtoep
