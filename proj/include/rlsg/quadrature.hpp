#pragma once
// One-dimensional quadrature for complex-valued integrands.

#include <functional>

#include "rlsg/types.hpp"

namespace rlsg::quad {

using Integrand = std::function<Complex(double)>;

struct Result {
  Complex value;
  double error = 0.0;      // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

struct Tolerance {
  double abs = 1e-13;
  double rel = 1e-12;
  int max_intervals = 2000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b].
Result gauss_kronrod(const Integrand& f, double a, double b, Tolerance tol = {});

/// Double-exponential (tanh-sinh) rule on [a, b]. Tolerates integrable
/// algebraic singularities at either endpoint; the integrand is never
/// evaluated exactly at a or b.
Result tanh_sinh(const Integrand& f, double a, double b, Tolerance tol = {});

}  // namespace rlsg::quad
