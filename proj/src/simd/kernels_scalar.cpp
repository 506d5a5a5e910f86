#include <cmath>

#include "rlsg/kernels.hpp"

namespace rlsg::kernels::scalar {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double ar = a[j].real(), ai = a[j].imag();
    const double br = b[j].real(), bi = b[j].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  const double cr = alpha.real(), ci = alpha.imag();
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double xr = x[j].real(), xi = x[j].imag();
    y[j] = Complex(y[j].real() + cr * xr - ci * xi, y[j].imag() + cr * xi + ci * xr);
  }
}

double sq_norm(std::span<const Complex> a) {
  double s = 0.0;
  for (const Complex& z : a) s += z.real() * z.real() + z.imag() * z.imag();
  return s;
}

double max_abs(std::span<const Complex> a) {
  double m2 = 0.0;
  for (const Complex& z : a) {
    const double v = z.real() * z.real() + z.imag() * z.imag();
    if (v > m2) m2 = v;
  }
  return std::sqrt(m2);
}

}  // namespace rlsg::kernels::scalar
