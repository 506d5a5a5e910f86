#include "rlsg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rlsg/quadrature.hpp"
#include "rlsg/specfun.hpp"

namespace rlsg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_strip(Complex alpha, const char* what) {
  if (!(alpha.real() > -1.0 && alpha.real() <= 1.0)) {
    std::ostringstream os;
    os << what << ": requires -1 < Re(alpha) <= 1, got alpha = " << alpha;
    throw DomainError(os.str());
  }
}

// I_n / (i n^alpha) = int_0^{n pi/2} exp(-i (alpha+1) x/n + 4 i pi n sin^2(x/2n)
//                                          - 2 pi n sin(x/n)) dx
// The modulus is below max(1, e^{pi Im(alpha)/2}) e^{-4x}, so the range is cut at 60.
Complex arc_integral(Complex alpha, double n) {
  const double upper = std::min(n * kPi / 2.0, 60.0);
  const Complex a1 = alpha + 1.0;
  const quad::Integrand f = [&](double x) {
    const double s = std::sin(x / (2.0 * n));
    const Complex e = Complex(-2.0 * kPi * n * std::sin(x / n), 4.0 * kPi * n * s * s) -
                      kI * a1 * (x / n);
    return std::exp(e);
  };
  const quad::Result r = quad::gauss_kronrod(f, 0.0, upper, {1e-17, 1e-14, 4000});
  return kI * specfun::cpow_real_base(n, alpha) * r.value;
}

}  // namespace

FourierMode::FourierMode(long n) : n_(n) {
  if (n < 1) throw DomainError("Fourier mode index must be >= 1");
}

Complex psi_hat(Complex alpha, FourierMode mode) {
  require_strip(alpha, "psi_hat");
  const double n = mode.value();
  const Complex a1 = alpha + 1.0;
  const Complex ray = -kI * std::exp(-kI * (kPi * alpha / 2.0)) *
                      specfun::cpow_real_base(2.0 * kPi, -a1) *
                      specfun::lower_incomplete_gamma(a1, 2.0 * kPi * n);
  return specfun::cpow_real_base(n, -a1) * (ray + arc_integral(alpha, n));
}

Complex psi_hat_direct(Complex alpha, FourierMode mode) {
  require_strip(alpha, "psi_hat_direct");
  const double n = mode.value();
  const double c = 2.0 * kPi * n;
  const double panel = 1.0 / n;
  // First period: s^alpha (e^{-ics} - 1) is integrated numerically and the
  // singular part s^alpha exactly.
  const quad::Integrand head = [&](double s) {
    return specfun::cpow_real_base(s, alpha) * specfun::expm1(Complex(0.0, -c * s));
  };
  Complex total = quad::tanh_sinh(head, 0.0, panel, {1e-18, 1e-13}).value +
                  specfun::cpow_real_base(panel, alpha + 1.0) / (alpha + 1.0);
  // Panel k starts at s = k/n where e^{-ics} = 1, so the phase is taken
  // relative to the panel start to keep its argument below 2 pi.
  const long panels = mode.n();
  const quad::Tolerance tol{1e-14 / n, 1e-13};
  for (long k = 1; k < panels; ++k) {
    const double a = static_cast<double>(k) * panel;
    const double width = (k + 1 == panels ? 1.0 : static_cast<double>(k + 1) * panel) - a;
    const quad::Integrand body = [&](double t) {
      return specfun::cpow_real_base(a + t, alpha) * std::polar(1.0, -c * t);
    };
    total += quad::gauss_kronrod(body, 0.0, width, tol).value;
  }
  return total;
}

Complex psi_hat_expansion(Complex alpha, FourierMode mode) {
  require_strip(alpha, "psi_hat_expansion");
  const double n = mode.value();
  const Complex a1 = alpha + 1.0;
  // (2 i pi n)^-(alpha+1) = exp(-(alpha+1)(ln(2 pi n) + i pi/2))
  const Complex power = std::exp(-a1 * Complex(std::log(2.0 * kPi * n), kPi / 2.0));
  return specfun::gamma(a1) * power + kI / (2.0 * kPi * n);
}

Complex diagonal_exact(const ComplexOrder& order, FourierMode n) {
  if (!(order.tau() <= 1.0)) {
    std::ostringstream os;
    os << "diagonal_exact: the power-function route needs 0 < Re(xi) <= 1, got Re(xi) = "
       << order.tau();
    throw DomainError(os.str());
  }
  const Complex xi = order.xi();
  return (psi_hat(xi - 1.0, n) - psi_hat(xi, n)) / specfun::gamma(xi);
}

Complex diagonal_asymptote(const ComplexOrder& order, FourierMode n) {
  return std::exp(-order.xi() * Complex(std::log(2.0 * kPi * n.value()), kPi / 2.0));
}

DiagonalReport diagonal_report(const ComplexOrder& order, FourierMode n) {
  DiagonalReport r;
  r.n = n.n();
  r.exact = diagonal_exact(order, n);
  r.asymptote = diagonal_asymptote(order, n);
  r.ratio = r.exact / r.asymptote;
  return r;
}

std::vector<double> spectral_radius_bound(const ComplexOrder& order, int n_max) {
  if (n_max < 1) throw DomainError("spectral_radius_bound: requires n_max >= 1");
  std::vector<double> b(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) {
    const double n = k;
    const double log_abs_gamma = specfun::log_gamma(n * order.xi()).real();
    b[static_cast<std::size_t>(k - 1)] =
        std::exp(-(std::log(n) + std::log(order.tau()) + log_abs_gamma) / n);
  }
  return b;
}

}  // namespace rlsg
