#pragma once

#include <cstddef>
#include <vector>

#include "bergtoep/mindex.hpp"
#include "bergtoep/parallel.hpp"

namespace bergtoep {

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{}) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix multiply(const CMatrix& a, const CMatrix& b, Exec exec = Exec::parallel);
CMatrix subtract(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a, Exec exec = Exec::parallel);
double max_abs_entry(const CMatrix& a);
double max_offdiag_abs(const CMatrix& a);

}  // namespace bergtoep
