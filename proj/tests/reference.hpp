#pragma once

// Naive serial reference implementations used only as test oracles.

#include <cmath>
#include <vector>

#include "bergtoep/groups.hpp"
#include "bergtoep/linalg.hpp"

namespace bergtoep::ref {

// One torus Fourier coefficient by direct summation over the grid.
inline cplx dft_torus_coeff(const OrbitGrid& grid, const std::vector<cplx>& values,
                            const std::vector<int>& k) {
  cplx acc{};
  const int lcount = grid.line_count();
  for (std::int64_t ti = 0; ti < grid.torus_count(); ++ti) {
    const std::vector<cplx> t = grid.torus_at(ti);
    cplx phase{1.0};
    for (std::size_t i = 0; i < t.size(); ++i) {
      const int e = k[i];
      for (int q = 0; q < std::abs(e); ++q) phase *= e > 0 ? std::conj(t[i]) : t[i];
    }
    acc += values[static_cast<std::size_t>(ti * lcount)] * phase;
  }
  double w = grid.weight_scale;
  for (int i = 0; i < grid.dim(); ++i) w /= grid.torus_nodes;
  return acc * w;
}

inline CMatrix matmul_naive(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Midpoint rule for int_0^1 g(u) du.
template <class G>
double midpoint01(const G& g, int nodes) {
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) acc += g((i + 0.5) / nodes);
  return acc / nodes;
}

}  // namespace bergtoep::ref
