#include "recur/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace recur::simd {

namespace detail {

bool avx2_supported() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Level pick_initial() {
  if (const char* env = std::getenv("RECURBENCH_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Level::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Level::Avx2;
  }
  return (avx2_supported() && kAvx2.dot != nullptr) ? Level::Avx2 : Level::Scalar;
}

const Kernels* g_active = nullptr;
Level g_level = Level::Scalar;

void apply(Level lvl) {
  if (lvl == Level::Avx2 && kAvx2.dot != nullptr) {
    g_active = &kAvx2;
    g_level = Level::Avx2;
  } else {
    g_active = &kScalar;
    g_level = Level::Scalar;
  }
}

const Kernels& active() {
  if (g_active == nullptr) apply(pick_initial());
  return *g_active;
}

}  // namespace
}  // namespace detail

Level active_level() {
  detail::active();
  return detail::g_level;
}

void force_level(Level lvl) { detail::apply(lvl); }

const char* level_name(Level lvl) {
  return lvl == Level::Avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
  return detail::active().dot(a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) {
  detail::active().axpy(alpha, x, y, n);
}
void rank1_lower(double* a, const double* x, double alpha, std::size_t p) {
  detail::active().rank1_lower(a, x, alpha, p);
}
void gemv(const double* w, const double* x, const double* b, double* out,
          std::size_t rows, std::size_t cols) {
  detail::active().gemv(w, x, b, out, rows, cols);
}
void ger(double* w, const double* u, const double* v, double alpha,
         std::size_t rows, std::size_t cols) {
  detail::active().ger(w, u, v, alpha, rows, cols);
}
double sum(const double* x, std::size_t n) { return detail::active().sum(x, n); }

}  // namespace recur::simd
