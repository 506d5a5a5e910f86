#pragma once
// Complex special functions on the right half-plane.

#include "rlsg/types.hpp"

namespace rlsg::specfun {

/// Gamma(z) for Re(z) > 0. Throws DomainError otherwise.
Complex gamma(Complex z);

/// A logarithm of Gamma(z) for Re(z) > 0. The real part is log|Gamma(z)|;
/// the imaginary part is an argument of Gamma(z), not necessarily the
/// continuous branch. Safe for large |z| where gamma() overflows.
Complex log_gamma(Complex z);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), Re(a), Re(b) > 0.
Complex beta(Complex a, Complex b);

/// gamma(s, x) = int_0^x u^(s-1) e^(-u) du, Re(s) > 0, x >= 0.
Complex lower_incomplete_gamma(Complex s, double x);

/// Gamma(s, x) = int_x^inf u^(s-1) e^(-u) du, Re(s) > 0, x >= 0.
Complex upper_incomplete_gamma(Complex s, double x);

/// x^z = exp(z ln x) for a strictly positive real base.
Complex cpow_real_base(double x, Complex z);

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

}  // namespace rlsg::specfun
