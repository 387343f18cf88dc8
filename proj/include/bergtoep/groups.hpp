#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bergtoep/bergman.hpp"

namespace bergtoep {

enum class GroupKind { elliptic, parabolic, hyperbolic };

const char* to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

/// Torus rank of the lifted group: n for the elliptic family, n-1 otherwise.
int torus_dim(GroupKind kind, int n);

/// Element of a lifted maximal abelian subgroup.  torus entries have modulus
/// one; line is the translation (parabolic) or boost (hyperbolic) coordinate
/// and stays zero for elliptic elements; cover_x is the covering coordinate,
/// constrained by e^{2 pi i (n+1) x} * prod(torus) = 1.
struct GroupElement {
  GroupKind kind = GroupKind::elliptic;
  int n = 1;
  std::vector<cplx> torus;
  double line = 0.0;
  double cover_x = 0.0;
};

/// Validating constructor; throws std::invalid_argument on a bad element.
GroupElement make_element(GroupKind kind, int n, std::vector<cplx> torus,
                          double line, double cover_x);
GroupElement identity_element(GroupKind kind, int n);
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// Uniform random element; the covering coordinate is solved from the torus
/// part so the constraint holds to rounding.  line is uniform on
/// [-line_range, line_range].
GroupElement random_element(GroupKind kind, int n, std::mt19937_64& gen,
                            double line_range = 2.0);

/// Orbit base point: elliptic ((2n)^{-1/2},...); parabolic/hyperbolic
/// ((2(n-1))^{-1/2},...,0) for n >= 2 and the origin for n = 1.
Point base_point(GroupKind kind, int n);

/// Ball -> Siegel domain biholomorphism z -> i/(1+z_n) (z', 1-z_n) and its
/// inverse w -> 1/(1-i w_n) (-2i w', 1+i w_n).
Point cayley(const Point& z);
Point cayley_inv(const Point& w);

/// Action on the open ball (closed formulas per family).
Point act(const GroupElement& g, const Point& z);

/// Action on the Siegel domain; parabolic translates z_n by line, hyperbolic
/// dilates by r^2 with r = e^{-line}.  Test oracle for `act`; parabolic and
/// hyperbolic elements only.
Point act_siegel(const GroupElement& g, const Point& w);

/// D_lambda(g) = j_lambda(g, z0):
///   elliptic    e^{-2 pi i lambda x}
///   parabolic   2^lambda e^{-2 pi i lambda x} (2 - i y)^{-lambda}
///   hyperbolic  e^{-2 pi i lambda x} cosh(s)^{-lambda}
cplx d_lambda(const GroupElement& g, const Weight& wt);

/// The covering-phase-free factor e^{2 pi i lambda x} D_lambda(g), as a
/// function of the torus/line coordinates only.
cplx d_lambda_tilde(GroupKind kind, double line, const Weight& wt);

bool stabilizes_base_point(const GroupElement& g, double tol = 1e-10);

/// Lifted stabilizer character e^{2 pi i lambda x}; throws if k does not
/// stabilize the base point.
cplx chi_lambda(const GroupElement& k, const Weight& wt);

/// | D(h k) - D(h) chi(k)^{-1} |
double chi_lambda_residual(const GroupElement& h, const GroupElement& k,
                           const Weight& wt);

/// Product grid on the orbit H.z0: M nodes per torus circle (normalized Haar
/// weight 1/M each) and, for the parabolic/hyperbolic families, L midpoint
/// nodes on [-S, S] with weight 2S/L each.
struct OrbitGrid {
  GroupKind kind = GroupKind::elliptic;
  int n = 1;
  int torus_nodes = 1;   // M
  int line_nodes = 0;    // L (0 when there is no line factor)
  double halfwidth = 0;  // S
  double weight_scale = 1.0;

  int dim() const { return torus_dim(kind, n); }
  bool has_line() const { return kind != GroupKind::elliptic; }
  std::int64_t torus_count() const;
  int line_count() const { return has_line() ? line_nodes : 1; }
  std::int64_t size() const { return torus_count() * line_count(); }

  std::vector<cplx> torus_at(std::int64_t torus_flat) const;
  double line_at(int line_idx) const;
  double node_weight() const;
};

OrbitGrid orbit_grid(GroupKind kind, int n, int torus_nodes, int line_nodes,
                     double halfwidth);

}  // namespace bergtoep
