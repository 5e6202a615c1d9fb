#ifndef RECUR_SIMD_HPP
#define RECUR_SIMD_HPP

#include <cstddef>

// Data-parallel kernels for the arithmetic inner loops (partial-likelihood
// accumulation, network forward/backward). Scalar reference implementations
// always exist; an AVX2/FMA variant is selected at runtime when the CPU
// supports it. Set RECURBENCH_SIMD=scalar (or call force_level) to pin the
// scalar path.
namespace recur::simd {

enum class Level { Scalar, Avx2 };

Level active_level();
void force_level(Level lvl);
const char* level_name(Level lvl);

// dot product  sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// lower triangle of A (row-major p x p) += alpha * x x^T
void rank1_lower(double* a, const double* x, double alpha, std::size_t p);

// out[r] = b[r] + sum_c w[r*cols + c] * x[c]   (row-major W)
void gemv(const double* w, const double* x, const double* b, double* out,
          std::size_t rows, std::size_t cols);

// W[r*cols + c] += alpha * u[r] * v[c]
void ger(double* w, const double* u, const double* v, double alpha,
         std::size_t rows, std::size_t cols);

double sum(const double* x, std::size_t n);

namespace detail {
// one table per implementation; dispatch swaps the active pointer set
struct Kernels {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rank1_lower)(double*, const double*, double, std::size_t);
  void (*gemv)(const double*, const double*, const double*, double*, std::size_t, std::size_t);
  void (*ger)(double*, const double*, const double*, double, std::size_t, std::size_t);
  double (*sum)(const double*, std::size_t);
};
extern const Kernels kScalar;
extern const Kernels kAvx2;  // null entries when not compiled in
bool avx2_supported();
}  // namespace detail

}  // namespace recur::simd

#endif  // RECUR_SIMD_HPP
