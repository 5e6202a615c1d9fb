// Compiled with -mavx2 -mfma; only reached after the runtime cpuid check.
#include "recur/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace recur::simd::detail {

namespace {

inline double hsum256(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum256(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void rank1_lower_avx2(double* a, const double* x, double alpha, std::size_t p) {
  for (std::size_t i = 0; i < p; ++i) {
    axpy_avx2(alpha * x[i], x, a + i * p, i + 1);
  }
}

void gemv_avx2(const double* w, const double* x, const double* b, double* out,
               std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    out[r] = (b ? b[r] : 0.0) + dot_avx2(w + r * cols, x, cols);
  }
}

void ger_avx2(double* w, const double* u, const double* v, double alpha,
              std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    axpy_avx2(alpha * u[r], v, w + r * cols, cols);
  }
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = hsum256(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

}  // namespace

const Kernels kAvx2 = {dot_avx2, axpy_avx2, rank1_lower_avx2,
                       gemv_avx2, ger_avx2, sum_avx2};

}  // namespace recur::simd::detail

#else

namespace recur::simd::detail {
const Kernels kAvx2 = {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
}  // namespace recur::simd::detail

#endif
