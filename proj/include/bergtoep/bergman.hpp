#pragma once

#include <vector>

#include "bergtoep/mindex.hpp"

namespace bergtoep {

struct GroupElement;  // groups.hpp

/// Point of C^n; ball membership is checked by the operations that need it.
using Point = std::vector<cplx>;

/// |z|^2 = sum |z_i|^2
double abs_sq(const Point& z);

/// z . conj(w)
cplx herm_inner(const Point& z, const Point& w);

/// Squared monomial norm h_r = r! Gamma(lambda) / Gamma(lambda + |r|),
/// evaluated for every lambda > 0 (the continued regime included).
double norm_sq(const MultiIndex& r, const Weight& wt);
double log_norm_sq(const MultiIndex& r, const Weight& wt);

/// Reproducing kernel (1 - z.conj(w))^{-lambda}, principal branch.
/// Throws std::domain_error off the open ball.
cplx kernel_eval(const Point& z, const Point& w, const Weight& wt);

/// Kernel truncated to monomials of degree <= max_degree.
cplx kernel_eval_truncated(const Point& z, const Point& w, const Weight& wt,
                           int max_degree);

/// Diagonal eigenvalues of the continuation factors on monomial degree k:
///   a(k) = prod_{j=m}^{2m-1} (lambda+j+k)/(lambda+j)
///   b(k) = prod_{j=0}^{m-1}  (lambda+j+k)/(lambda+j)
/// Both are identically 1 when m = 0.
class ABFactors {
 public:
  explicit ABFactors(const Weight& wt) : wt_(wt) {}
  double a_eig(int k) const;
  double b_eig(int k) const;
  double ab_eig(int k) const { return a_eig(k) * b_eig(k); }
  const Weight& weight() const { return wt_; }

 private:
  Weight wt_;
};

double ab_eigenvalue(int k, const Weight& wt);

/// | a b h_r(lambda+2m) - h_r(lambda) | / h_r(lambda).  Zero when m = 0.
double gram_consistency_residual(const MultiIndex& r, const Weight& wt);

/// Covariance of coherent states under the lifted torus action, measured on a
/// fixed sample grid with the degree-truncated kernel on one side and the
/// closed-form kernel on the other.  Requires lambda > n and an elliptic g.
double coherent_covariance_residual(const GroupElement& g, const Point& z,
                                    const Weight& wt, int max_degree);

}  // namespace bergtoep
