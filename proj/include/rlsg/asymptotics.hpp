#pragma once
// Fourier-diagonal entries <V e_n, e_n> with e_n(x) = exp(2 i pi n x), and the
// Fourier coefficients of the power functions psi_alpha(s) = s^alpha.

#include <vector>

#include "rlsg/types.hpp"

namespace rlsg {

class FourierMode {
 public:
  explicit FourierMode(long n);
  long n() const { return n_; }
  double value() const { return static_cast<double>(n_); }

 private:
  long n_;
};

/// psi_hat_alpha(n) = int_0^1 s^alpha exp(-2 i pi n s) ds for Re(alpha) in (-1, 1].
///
/// Rotating [0, n] onto the negative imaginary axis gives
///   n^(alpha+1) psi_hat = -i e^(-i pi alpha/2) (2 pi)^-(alpha+1) gamma(alpha+1, 2 pi n) + I_n
/// where I_n is the integral over the closing quarter arc, evaluated by
/// adaptive quadrature after the substitution x = -n t.
Complex psi_hat(Complex alpha, FourierMode n);

/// Same quantity by direct quadrature of the defining integral: the first
/// period is split off and its s^alpha singularity subtracted analytically,
/// the remaining periods are integrated panel by panel.
Complex psi_hat_direct(Complex alpha, FourierMode n);

/// Two leading terms Gamma(alpha+1)/(2 i pi n)^(alpha+1) + i/(2 pi n).
Complex psi_hat_expansion(Complex alpha, FourierMode n);

/// <V e_n, e_n> = (psi_hat_{xi-1}(n) - psi_hat_xi(n)) / Gamma(xi), 0 < tau <= 1.
Complex diagonal_exact(const ComplexOrder& order, FourierMode n);

/// (2 i pi n)^-xi with the principal branch arg(2 i pi n) = pi/2.
Complex diagonal_asymptote(const ComplexOrder& order, FourierMode n);

struct DiagonalReport {
  long n = 0;
  Complex exact;
  Complex asymptote;
  Complex ratio;  // exact / asymptote
};

DiagonalReport diagonal_report(const ComplexOrder& order, FourierMode n);

/// b_n = (n tau |Gamma(n xi)|)^(-1/n) for n = 1..n_max, through log-Gamma.
std::vector<double> spectral_radius_bound(const ComplexOrder& order, int n_max);

}  // namespace rlsg
