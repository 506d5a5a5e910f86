#pragma once
// Riemann-Liouville fractional integration of complex order on (0,1):
//   (V f)(x) = 1/Gamma(xi) int_0^x f(u) (x - u)^(xi - 1) du.

#include <vector>

#include "rlsg/types.hpp"

namespace rlsg {

/// Closed-form image of a power x^beta: coefficient * x^exponent.
struct PowerImage {
  Complex coefficient;
  Complex exponent;

  Complex at(double x) const;
};

struct CyclicityReport {
  double ell = 0.0;
  double p_exponent = 1.0;
  bool cyclic = false;
};

/// K(x,u) = 1_{u<x} (x-u)^(xi-1) / Gamma(xi).
Complex kernel(const ComplexOrder& order, double x, double u);

/// phi(u) = u^(xi-1) / Gamma(xi), the convolution weight.
Complex kernel_weight(const ComplexOrder& order, double u);

/// ||phi||_1 = 1 / (tau |Gamma(xi)|).
double l1_norm(const ComplexOrder& order);

/// ||phi||_r for 1 <= r <= infinity. Finite iff tau > 1 - 1/r
/// (tau >= 1 when r is infinite); throws DomainError otherwise.
double lr_norm(const ComplexOrder& order, double r);

/// V x^beta = Gamma(beta+1)/Gamma(beta+1+xi) x^(beta+xi), Re(beta) > -1.
PowerImage apply_power(const ComplexOrder& order, Complex beta);

/// V x^n for integer n >= 0.
PowerImage apply_monomial(const ComplexOrder& order, int n);

/// Exact cell moments of the kernel on a uniform grid, already divided by
/// Gamma(xi): w[k] = int over the cell k steps left of node i, with w[0]
/// the half cell ending at the node. V f at node i is sum_k w[k] f[i-k].
std::vector<Complex> cell_weights(const ComplexOrder& order, const GridSpec& grid);

/// Product-integration evaluation of V f at the nodes, treating f as
/// piecewise constant on cells.
SampledFunction apply(const ComplexOrder& order, const SampledFunction& f);

/// Same scheme for the adjoint
///   (V* f)(x) = 1/conj(Gamma(xi)) int_x^1 f(u) (u - x)^(conj(xi) - 1) du.
SampledFunction adjoint_apply(const ComplexOrder& order, const SampledFunction& f);

/// Discrete L2 inner product h sum f conj(g).
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

/// Left end of the essential support of f. Values at or below
/// 1e-12 * max|f| count as zero.
CyclicityReport cyclicity_index(const SampledFunction& f, double p);

}  // namespace rlsg
