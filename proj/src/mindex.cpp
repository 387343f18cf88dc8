#include "bergtoep/mindex.hpp"

#include <algorithm>
#include <cmath>

namespace bergtoep {

int degree(const MultiIndex& r) {
  int d = 0;
  for (int e : r) d += e;
  return d;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t basis_size(int n, int max_degree, std::size_t max_size) {
  if (n < 1 || max_degree < 0) throw std::invalid_argument("basis_size: n >= 1, D >= 0 required");
  unsigned long long acc = 1;
  for (int i = 1; i <= n; ++i) {
    // C(D+i, i) = C(D+i-1, i-1) * (D+i) / i, exact at every step
    acc = acc * static_cast<unsigned long long>(max_degree + i) / static_cast<unsigned long long>(i);
    if (acc > static_cast<unsigned long long>(max_size))
      throw BasisOverflowError("basis_size: C(n+D,n) exceeds max basis size " +
                               std::to_string(max_size));
  }
  return static_cast<std::size_t>(acc);
}

namespace {

void emit_degree(int n, int pos, int remaining, MultiIndex& scratch,
                 std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    scratch[pos] = remaining;
    out.push_back(scratch);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    scratch[pos] = e;
    emit_degree(n, pos + 1, remaining - e, scratch, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_basis(int n, int max_degree, std::size_t max_size) {
  const std::size_t count = basis_size(n, max_degree, max_size);
  std::vector<MultiIndex> out;
  out.reserve(count);
  MultiIndex scratch(n, 0);
  for (int k = 0; k <= max_degree; ++k) emit_degree(n, 0, k, scratch, out);
  return out;
}

namespace {

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;
constexpr double kStirlingCut = 15.0;

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + i);
  const double base = z + 7.5;
  return kLogSqrtTwoPi + std::log(sum) + (z + 0.5) * std::log(base) - base;
}

double log_gamma_stirling(double x) {
  // B_{2k} / (2k (2k-1) x^{2k-1}), five terms
  constexpr double c[5] = {1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0,
                           -1.0 / 1680.0, 1.0 / 1188.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (double ck : c) {
    series += ck * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kLogSqrtTwoPi + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return x < kStirlingCut ? log_gamma_lanczos(x) : log_gamma_stirling(x);
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("gamma_ratio: requires a, b > 0");
  return std::exp(log_gamma(a) - log_gamma(b));
}

double pochhammer(double x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: k >= 0 required");
  double acc = 1.0;
  for (int j = 0; j < k; ++j) acc *= x + j;
  return acc;
}

double log_factorial(const MultiIndex& r) {
  double acc = 0.0;
  for (int e : r) {
    if (e < 0) throw std::invalid_argument("log_factorial: negative exponent");
    acc += log_gamma(static_cast<double>(e) + 1.0);
  }
  return acc;
}

Weight::Weight(int n, double lambda) : n_(n), lambda_(lambda) {
  if (n < 1) throw std::invalid_argument("Weight: n >= 1 required");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("Weight: lambda > 0 required");
  for (int k = 0; k <= n; ++k) {
    if (std::abs(lambda - k) <= kPoleGuard)
      throw std::invalid_argument("Weight: lambda within pole guard of " + std::to_string(k));
  }
  int m = 0;
  while (lambda + 2.0 * m <= n) ++m;
  m_ = m;
}

Weight Weight::shifted() const { return Weight(n_, lambda_ + 2.0 * m_); }

}  // namespace bergtoep
