#include <atomic>
#include <stdexcept>
#include <string>

#include "rlsg/kernels.hpp"

namespace rlsg::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(RLSG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool backend_supported(Backend b) {
  return b == Backend::kScalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::runtime_error("kernel backend not supported on this CPU: " +
                             std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

#if defined(RLSG_HAVE_AVX2)
#define RLSG_DISPATCH(fn, ...) \
  (active_backend() == Backend::kAvx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define RLSG_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("kernels::dot: size mismatch");
  return RLSG_DISPATCH(dot, a, b);
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("kernels::axpy: size mismatch");
  RLSG_DISPATCH(axpy, alpha, x, y);
}

double sq_norm(std::span<const Complex> a) { return RLSG_DISPATCH(sq_norm, a); }

double max_abs(std::span<const Complex> a) { return RLSG_DISPATCH(max_abs, a); }

}  // namespace rlsg::kernels
