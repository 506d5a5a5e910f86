#pragma once
// Data-parallel inner loops. Every kernel has a portable scalar reference
// and, on x86-64, an AVX2/FMA variant; the variant is chosen once at
// runtime from CPUID and can be pinned for testing.

#include <complex>
#include <span>
#include <string_view>

namespace rlsg::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

/// sum_j a[j] * b[j] (no conjugation). Sizes must match.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);

/// y[j] += alpha * x[j]. Sizes must match.
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);

/// sum_j |a[j]|^2
double sq_norm(std::span<const Complex> a);

/// max_j |a[j]|, 0 for an empty span.
double max_abs(std::span<const Complex> a);

Backend active_backend();
/// Pins the backend. Throws std::runtime_error if the CPU lacks support.
void set_backend(Backend b);
bool backend_supported(Backend b);
std::string_view backend_name(Backend b);

namespace scalar {
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double sq_norm(std::span<const Complex> a);
double max_abs(std::span<const Complex> a);
}  // namespace scalar

#if defined(RLSG_HAVE_AVX2)
namespace avx2 {
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double sq_norm(std::span<const Complex> a);
double max_abs(std::span<const Complex> a);
}  // namespace avx2
#endif

}  // namespace rlsg::kernels
