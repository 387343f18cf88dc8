#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergtoep {

using cplx = std::complex<double>;

inline constexpr double kPoleGuard = 1e-9;
inline constexpr std::size_t kDefaultMaxBasis = 20000;

/// Exponent vector indexing the monomial basis; all entries >= 0.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& r);

/// Graded order: by total degree, lexicographically descending within a
/// degree, so for n=2:  (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct BasisOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// C(n + max_degree, n), throws BasisOverflowError past max_size.
std::size_t basis_size(int n, int max_degree,
                       std::size_t max_size = kDefaultMaxBasis);

/// All r with |r| <= max_degree in the graded order above.
std::vector<MultiIndex> enumerate_basis(int n, int max_degree,
                                        std::size_t max_size = kDefaultMaxBasis);

/// log Gamma(x), x > 0.  Lanczos below the Stirling cutover, Bernoulli-series
/// Stirling above; relative error well under 1e-12 through x = 1e4.
double log_gamma(double x);

/// Gamma(a)/Gamma(b) for a, b > 0, evaluated in the log domain.
double gamma_ratio(double a, double b);

/// Rising factorial x(x+1)...(x+k-1) as a plain product; k = 0 gives 1.
double pochhammer(double x, int k);

/// log(r!) = sum of log Gamma(r_i + 1).
double log_factorial(const MultiIndex& r);

/// Continuation weight.  lambda must stay clear of the integer poles
/// {0, 1, ..., n} by more than kPoleGuard; m is the smallest non-negative
/// integer with lambda + 2m > n (zero when lambda > n).
class Weight {
 public:
  Weight(int n, double lambda);

  int n() const { return n_; }
  double lambda() const { return lambda_; }
  int m() const { return m_; }

  /// Same dimension, weight lambda + 2m (the classical-regime companion).
  Weight shifted() const;

 private:
  int n_;
  double lambda_;
  int m_;
};

}  // namespace bergtoep
