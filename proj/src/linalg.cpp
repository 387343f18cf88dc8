#include "bergtoep/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace bergtoep {

CMatrix multiply(const CMatrix& a, const CMatrix& b, Exec exec) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  CMatrix out(a.rows(), b.cols());
  const std::int64_t total = static_cast<std::int64_t>(a.rows() * b.cols());
  const std::size_t bc = b.cols();
  par_for(total, exec, [&](std::int64_t idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / bc;
    const std::size_t j = static_cast<std::size_t>(idx) % bc;
    cplx acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
    out(i, j) = acc;
  });
  return out;
}

CMatrix subtract(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("subtract: shape mismatch");
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = a.data()[i] - b.data()[i];
  return out;
}

double frobenius_norm(const CMatrix& a, Exec exec) {
  const double s = chunked_sum<double>(
      static_cast<std::int64_t>(a.data().size()), exec,
      [&](std::int64_t i) { return std::norm(a.data()[static_cast<std::size_t>(i)]); });
  return std::sqrt(s);
}

double max_abs_entry(const CMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_offdiag_abs(const CMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace bergtoep
