#include "recur/simd.hpp"

namespace recur::simd::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rank1_lower_scalar(double* a, const double* x, double alpha, std::size_t p) {
  for (std::size_t i = 0; i < p; ++i) {
    const double axi = alpha * x[i];
    double* row = a + i * p;
    for (std::size_t j = 0; j <= i; ++j) row[j] += axi * x[j];
  }
}

void gemv_scalar(const double* w, const double* x, const double* b, double* out,
                 std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = (b ? b[r] : 0.0) + dot_scalar(w + r * cols, x, cols);
  }
}

void ger_scalar(double* w, const double* u, const double* v, double alpha,
                std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    axpy_scalar(alpha * u[r], v, w + r * cols, cols);
  }
}

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

}  // namespace

const Kernels kScalar = {dot_scalar, axpy_scalar, rank1_lower_scalar,
                         gemv_scalar, ger_scalar, sum_scalar};

}  // namespace recur::simd::detail
