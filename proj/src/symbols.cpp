#include "bergtoep/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "bergtoep/rng.hpp"

namespace bergtoep {

namespace {

auto term_key(const SymbolTerm& t) { return std::tie(t.a, t.b, t.p); }

cplx int_pow(cplx base, int e) {
  cplx acc{1.0};
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

SymbolExpr::SymbolExpr(int n, std::vector<SymbolTerm> terms) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymbolExpr: n >= 1 required");
  if (terms.empty()) throw std::invalid_argument("SymbolExpr: empty term list");
  for (const SymbolTerm& t : terms) {
    if (static_cast<int>(t.a.size()) != n || static_cast<int>(t.b.size()) != n)
      throw std::invalid_argument("SymbolExpr: exponent length must equal n");
    if (t.p < 0) throw std::invalid_argument("SymbolExpr: p >= 0 required");
    for (int e : t.a)
      if (e < 0) throw std::invalid_argument("SymbolExpr: negative exponent");
    for (int e : t.b)
      if (e < 0) throw std::invalid_argument("SymbolExpr: negative exponent");
  }
  std::sort(terms.begin(), terms.end(), [](const SymbolTerm& x, const SymbolTerm& y) {
    return term_key(x) < term_key(y);
  });
  for (const SymbolTerm& t : terms) {
    if (!terms_.empty() && term_key(terms_.back()) == term_key(t))
      terms_.back().c += t.c;
    else
      terms_.push_back(t);
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const SymbolTerm& t) { return t.c == cplx{}; }),
               terms_.end());
  if (terms_.empty())
    terms_.push_back(SymbolTerm{cplx{}, MultiIndex(n, 0), MultiIndex(n, 0), 0});
}

SymbolExpr SymbolExpr::constant(int n, cplx c) {
  return SymbolExpr(n, {SymbolTerm{c, MultiIndex(n, 0), MultiIndex(n, 0), 0}});
}

cplx SymbolExpr::eval(const Point& z) const {
  if (static_cast<int>(z.size()) != n_)
    throw std::invalid_argument("SymbolExpr::eval: dimension mismatch");
  const double radial = 1.0 - abs_sq(z);
  cplx acc{};
  for (const SymbolTerm& t : terms_) {
    cplx v = t.c;
    for (int i = 0; i < n_; ++i) v *= int_pow(z[i], t.a[i]) * int_pow(std::conj(z[i]), t.b[i]);
    double rp = 1.0;
    for (int q = 0; q < t.p; ++q) rp *= radial;
    acc += v * rp;
  }
  return acc;
}

std::string SymbolExpr::canonical_key() const {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << n_;
  for (const SymbolTerm& t : terms_) {
    os << ";c=" << t.c.real() << "," << t.c.imag() << ";a=";
    for (int e : t.a) os << e << ".";
    os << ";b=";
    for (int e : t.b) os << e << ".";
    os << ";p=" << t.p;
  }
  return os.str();
}

std::uint64_t SymbolExpr::hash() const {
  // FNV-1a 64
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : canonical_key()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

int SymbolExpr::max_a_degree() const {
  int d = 0;
  for (const SymbolTerm& t : terms_) d = std::max(d, degree(t.a));
  return d;
}

int SymbolExpr::max_b_degree() const {
  int d = 0;
  for (const SymbolTerm& t : terms_) d = std::max(d, degree(t.b));
  return d;
}

bool is_elliptic_invariant(const SymbolExpr& phi) {
  for (const SymbolTerm& t : phi.terms())
    if (t.a != t.b) return false;
  return true;
}

bool is_real_valued(const SymbolExpr& phi) {
  const auto& terms = phi.terms();
  for (const SymbolTerm& t : terms) {
    bool matched = false;
    for (const SymbolTerm& u : terms) {
      if (u.a == t.b && u.b == t.a && u.p == t.p && u.c == std::conj(t.c)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

SymbolExpr torus_transform(const SymbolExpr& phi, const std::vector<cplx>& t) {
  if (static_cast<int>(t.size()) != phi.n())
    throw std::invalid_argument("torus_transform: torus length must equal n");
  std::vector<SymbolTerm> out = phi.terms();
  for (SymbolTerm& term : out) {
    cplx mult{1.0};
    for (int i = 0; i < phi.n(); ++i) {
      const int e = term.b[i] - term.a[i];
      mult *= e >= 0 ? int_pow(t[i], e) : int_pow(std::conj(t[i]), -e);
    }
    term.c *= mult;
  }
  return SymbolExpr(phi.n(), std::move(out));
}

double invariance_residual(const SymbolExpr& phi, GroupKind kind, int samples,
                           std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("invariance_residual: samples >= 1");
  std::mt19937_64 gen(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GroupElement h = random_element(kind, phi.n(), gen, 2.0);
    const Point z = random_ball_point(phi.n(), 0.9, gen);
    const cplx moved = phi.eval(act(inverse(h), z));
    worst = std::max(worst, std::abs(moved - phi.eval(z)));
  }
  return worst;
}

}  // namespace bergtoep
