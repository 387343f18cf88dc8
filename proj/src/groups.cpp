#include "bergtoep/groups.hpp"

#include <cmath>

#include "bergtoep/rng.hpp"

namespace bergtoep {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::elliptic: return "elliptic";
    case GroupKind::parabolic: return "parabolic";
    case GroupKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "elliptic") return GroupKind::elliptic;
  if (s == "parabolic") return GroupKind::parabolic;
  if (s == "hyperbolic") return GroupKind::hyperbolic;
  throw std::invalid_argument("unknown group kind: " + s);
}

int torus_dim(GroupKind kind, int n) {
  return kind == GroupKind::elliptic ? n : n - 1;
}

GroupElement make_element(GroupKind kind, int n, std::vector<cplx> torus,
                          double line, double cover_x) {
  if (n < 1) throw std::invalid_argument("group element: n >= 1 required");
  if (static_cast<int>(torus.size()) != torus_dim(kind, n))
    throw std::invalid_argument("group element: torus length must be " +
                                std::to_string(torus_dim(kind, n)));
  cplx prod{1.0};
  for (const cplx& t : torus) {
    if (std::abs(std::abs(t) - 1.0) > 1e-12)
      throw std::invalid_argument("group element: torus entry off the unit circle");
    prod *= t;
  }
  const cplx lift = std::polar(1.0, kTwoPi * (n + 1) * cover_x) * prod;
  if (std::abs(lift - cplx(1.0)) > 1e-12)
    throw std::invalid_argument("group element: cover constraint violated");
  if (kind == GroupKind::elliptic && line != 0.0)
    throw std::invalid_argument("group element: elliptic elements have no line part");
  GroupElement g;
  g.kind = kind;
  g.n = n;
  g.torus = std::move(torus);
  g.line = line;
  g.cover_x = cover_x;
  return g;
}

GroupElement identity_element(GroupKind kind, int n) {
  return make_element(kind, n, std::vector<cplx>(torus_dim(kind, n), cplx(1.0)), 0.0, 0.0);
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  if (g1.kind != g2.kind || g1.n != g2.n)
    throw std::invalid_argument("compose: mismatched elements");
  std::vector<cplx> torus(g1.torus.size());
  for (std::size_t i = 0; i < torus.size(); ++i) torus[i] = g1.torus[i] * g2.torus[i];
  return make_element(g1.kind, g1.n, std::move(torus), g1.line + g2.line,
                      g1.cover_x + g2.cover_x);
}

GroupElement inverse(const GroupElement& g) {
  std::vector<cplx> torus(g.torus.size());
  for (std::size_t i = 0; i < torus.size(); ++i) torus[i] = std::conj(g.torus[i]);
  return make_element(g.kind, g.n, std::move(torus), -g.line, -g.cover_x);
}

GroupElement random_element(GroupKind kind, int n, std::mt19937_64& gen,
                            double line_range) {
  const int d = torus_dim(kind, n);
  std::vector<cplx> torus(d);
  cplx prod{1.0};
  for (int i = 0; i < d; ++i) {
    torus[i] = random_unit(gen);
    prod *= torus[i];
  }
  // Solve the cover coordinate from the torus product.
  const double x = -std::arg(prod) / (kTwoPi * (n + 1));
  const double line =
      kind == GroupKind::elliptic ? 0.0 : uniform(gen, -line_range, line_range);
  return make_element(kind, n, std::move(torus), line, x);
}

Point base_point(GroupKind kind, int n) {
  if (kind == GroupKind::elliptic) {
    return Point(n, cplx(1.0 / std::sqrt(2.0 * n)));
  }
  if (n == 1) return Point(1, cplx(0.0));
  Point z(n, cplx(1.0 / std::sqrt(2.0 * (n - 1))));
  z.back() = 0.0;
  return z;
}

Point cayley(const Point& z) {
  if (z.empty()) throw std::invalid_argument("cayley: empty point");
  if (!(abs_sq(z) < 1.0)) throw std::domain_error("cayley: point outside the open ball");
  const cplx zn = z.back();
  const cplx denom = cplx(1.0) + zn;
  if (std::abs(denom) < 1e-300) throw std::domain_error("cayley: pole at z_n = -1");
  const cplx f = cplx(0.0, 1.0) / denom;
  Point w(z.size());
  for (std::size_t i = 0; i + 1 < z.size(); ++i) w[i] = f * z[i];
  w.back() = f * (cplx(1.0) - zn);
  return w;
}

Point cayley_inv(const Point& w) {
  if (w.empty()) throw std::invalid_argument("cayley_inv: empty point");
  const cplx wn = w.back();
  double wp = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) wp += std::norm(w[i]);
  if (!(wn.imag() - wp > 0.0))
    throw std::domain_error("cayley_inv: point outside the Siegel domain");
  const cplx denom = cplx(1.0) - cplx(0.0, 1.0) * wn;
  if (std::abs(denom) < 1e-300) throw std::domain_error("cayley_inv: pole");
  Point z(w.size());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) z[i] = cplx(0.0, -2.0) * w[i] / denom;
  z.back() = (cplx(1.0) + cplx(0.0, 1.0) * wn) / denom;
  return z;
}

Point act(const GroupElement& g, const Point& z) {
  if (static_cast<int>(z.size()) != g.n) throw std::invalid_argument("act: dimension mismatch");
  switch (g.kind) {
    case GroupKind::elliptic: {
      Point out(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) out[i] = g.torus[i] * z[i];
      return out;
    }
    case GroupKind::parabolic: {
      const double y = g.line;
      const cplx zn = z.back();
      const cplx iy = cplx(0.0, y);
      const cplx den = -iy * zn + cplx(2.0) - iy;
      Point out(z.size());
      for (std::size_t i = 0; i + 1 < z.size(); ++i) out[i] = 2.0 * g.torus[i] * z[i] / den;
      out.back() = ((cplx(2.0) + iy) * zn + iy) / den;
      return out;
    }
    case GroupKind::hyperbolic: {
      const double ch = std::cosh(g.line);
      const double sh = std::sinh(g.line);
      const cplx zn = z.back();
      const cplx den = zn * sh + ch;
      Point out(z.size());
      for (std::size_t i = 0; i + 1 < z.size(); ++i) out[i] = g.torus[i] * z[i] / den;
      out.back() = (zn * ch + sh) / den;
      return out;
    }
  }
  throw std::logic_error("act: bad kind");
}

Point act_siegel(const GroupElement& g, const Point& w) {
  if (static_cast<int>(w.size()) != g.n)
    throw std::invalid_argument("act_siegel: dimension mismatch");
  Point out(w.size());
  switch (g.kind) {
    case GroupKind::parabolic:
      for (std::size_t i = 0; i + 1 < w.size(); ++i) out[i] = g.torus[i] * w[i];
      out.back() = w.back() + g.line;
      return out;
    case GroupKind::hyperbolic: {
      const double r = std::exp(-g.line);
      for (std::size_t i = 0; i + 1 < w.size(); ++i) out[i] = r * g.torus[i] * w[i];
      out.back() = r * r * w.back();
      return out;
    }
    case GroupKind::elliptic:
      throw std::invalid_argument("act_siegel: elliptic action is given on the ball");
  }
  throw std::logic_error("act_siegel: bad kind");
}

cplx d_lambda_tilde(GroupKind kind, double line, const Weight& wt) {
  const double lam = wt.lambda();
  switch (kind) {
    case GroupKind::elliptic:
      return cplx(1.0);
    case GroupKind::parabolic:
      return std::exp(lam * std::log(2.0) - lam * std::log(cplx(2.0, -line)));
    case GroupKind::hyperbolic:
      return cplx(std::exp(-lam * std::log(std::cosh(line))));
  }
  throw std::logic_error("d_lambda_tilde: bad kind");
}

cplx d_lambda(const GroupElement& g, const Weight& wt) {
  return std::polar(1.0, -kTwoPi * wt.lambda() * g.cover_x) *
         d_lambda_tilde(g.kind, g.line, wt);
}

bool stabilizes_base_point(const GroupElement& g, double tol) {
  for (const cplx& t : g.torus)
    if (std::abs(t - cplx(1.0)) > tol) return false;
  return std::abs(g.line) <= tol;
}

cplx chi_lambda(const GroupElement& k, const Weight& wt) {
  if (!stabilizes_base_point(k))
    throw std::invalid_argument("chi_lambda: element does not stabilize the base point");
  return std::polar(1.0, kTwoPi * wt.lambda() * k.cover_x);
}

double chi_lambda_residual(const GroupElement& h, const GroupElement& k,
                           const Weight& wt) {
  const cplx chi_inv = std::polar(1.0, -kTwoPi * wt.lambda() * k.cover_x);
  (void)chi_lambda(k, wt);  // validates the stabilizer
  return std::abs(d_lambda(compose(h, k), wt) - d_lambda(h, wt) * chi_inv);
}

std::int64_t OrbitGrid::torus_count() const {
  std::int64_t c = 1;
  for (int i = 0; i < dim(); ++i) c *= torus_nodes;
  return c;
}

std::vector<cplx> OrbitGrid::torus_at(std::int64_t torus_flat) const {
  std::vector<cplx> t(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    const int digit = static_cast<int>(torus_flat % torus_nodes);
    torus_flat /= torus_nodes;
    t[i] = std::polar(1.0, kTwoPi * digit / torus_nodes);
  }
  return t;
}

double OrbitGrid::line_at(int line_idx) const {
  const double h = 2.0 * halfwidth / line_nodes;
  return -halfwidth + (line_idx + 0.5) * h;
}

double OrbitGrid::node_weight() const {
  double w = weight_scale;
  for (int i = 0; i < dim(); ++i) w /= torus_nodes;
  if (has_line()) w *= 2.0 * halfwidth / line_nodes;
  return w;
}

OrbitGrid orbit_grid(GroupKind kind, int n, int torus_nodes, int line_nodes,
                     double halfwidth) {
  if (torus_nodes < 1) throw std::invalid_argument("orbit_grid: M >= 1 required");
  if (kind != GroupKind::elliptic && line_nodes < 1)
    throw std::invalid_argument("orbit_grid: L >= 1 required");
  OrbitGrid g;
  g.kind = kind;
  g.n = n;
  g.torus_nodes = torus_nodes;
  g.line_nodes = kind == GroupKind::elliptic ? 0 : line_nodes;
  g.halfwidth = kind == GroupKind::elliptic ? 0.0 : halfwidth;
  return g;
}

}  // namespace bergtoep
