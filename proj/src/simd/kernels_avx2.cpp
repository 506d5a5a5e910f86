// Compiled with -mavx2 -mfma; only reached when CPUID reports both.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "rlsg/kernels.hpp"

namespace rlsg::kernels::avx2 {
namespace {

inline const double* raw(std::span<const Complex> s) {
  return reinterpret_cast<const double*>(s.data());
}
inline double* raw(std::span<Complex> s) { return reinterpret_cast<double*>(s.data()); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  const std::size_t n = a.size();
  // Lanes hold (re, im) pairs; rr collects (ar*br, ai*bi), ri collects (ar*bi, ai*br).
  __m256d rr0 = _mm256_setzero_pd(), rr1 = _mm256_setzero_pd();
  __m256d ri0 = _mm256_setzero_pd(), ri1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * j + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * j);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * j + 4);
    rr0 = _mm256_fmadd_pd(a0, b0, rr0);
    rr1 = _mm256_fmadd_pd(a1, b1, rr1);
    ri0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), ri0);
    ri1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), ri1);
  }
  for (; j + 2 <= n; j += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * j);
    rr0 = _mm256_fmadd_pd(a0, b0, rr0);
    ri0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), ri0);
  }
  const __m256d rr = _mm256_add_pd(rr0, rr1);
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(_mm256_mul_pd(rr, sign));
  double im = hsum(_mm256_add_pd(ri0, ri1));
  for (; j < n; ++j) {
    re += a[j].real() * b[j].real() - a[j].imag() * b[j].imag();
    im += a[j].real() * b[j].imag() + a[j].imag() * b[j].real();
  }
  return {re, im};
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const double* px = raw(x);
  double* py = raw(y);
  const std::size_t n = x.size();
  const __m256d cr = _mm256_set1_pd(alpha.real());
  const __m256d ci = _mm256_set1_pd(alpha.imag());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d xv = _mm256_loadu_pd(px + 2 * j);
    const __m256d t = _mm256_mul_pd(ci, _mm256_permute_pd(xv, 0b0101));
    // even lanes: cr*xr - ci*xi, odd lanes: cr*xi + ci*xr
    const __m256d prod = _mm256_fmaddsub_pd(cr, xv, t);
    _mm256_storeu_pd(py + 2 * j, _mm256_add_pd(_mm256_loadu_pd(py + 2 * j), prod));
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

double sq_norm(std::span<const Complex> a) {
  const double* pa = raw(a);
  const std::size_t n = a.size();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * j + 4);
    s0 = _mm256_fmadd_pd(a0, a0, s0);
    s1 = _mm256_fmadd_pd(a1, a1, s1);
  }
  for (; j + 2 <= n; j += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    s0 = _mm256_fmadd_pd(a0, a0, s0);
  }
  double s = hsum(_mm256_add_pd(s0, s1));
  for (; j < n; ++j) s += std::norm(a[j]);
  return s;
}

double max_abs(std::span<const Complex> a) {
  const double* pa = raw(a);
  const std::size_t n = a.size();
  __m256d m = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * j);
    const __m256d sq = _mm256_mul_pd(v, v);
    m = _mm256_max_pd(m, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double m2 = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; j < n; ++j) m2 = std::max(m2, std::norm(a[j]));
  return std::sqrt(m2);
}

}  // namespace rlsg::kernels::avx2
