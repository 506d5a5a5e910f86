#pragma once
// Quantitative laws of the fractional-integration semigroup checked on
// discretizations: norm bounds, the semigroup identity, strong continuity
// and the L^p' norms of kernel slices.

#include <cstdint>
#include <string>
#include <vector>

#include "rlsg/types.hpp"

namespace rlsg {

inline constexpr std::uint64_t kDefaultSeed = 0x5115EEDULL;

/// Conjugate exponent p' with 1/inf = 0.
double conjugate_exponent(double p);

/// Upper bound for ||V_xi||_{L^p -> L^q}, 1 <= p <= q <= inf (q = inf means
/// the target C_0[0,1] with the sup norm):
///   q < inf:            (1/|G|) ((1/p' + 1/q) / (tau - 1/p + 1/q))^(1/p' + 1/q)
///   q = inf, 1<p<inf:   (1/|G|) / ((tau - 1) p' + 1)^(1/p')
///   q = inf, p = 1:     1/|G|             (needs tau >= 1)
///   q = inf, p = inf:   1/(tau |G|)
/// Throws DomainError below the boundedness threshold tau > 1/p - 1/q.
double bound_formula(const ComplexOrder& order, double p, double q);

struct NormProbeOptions {
  std::size_t grid_size = 1024;
  int trials = 16;
  std::uint64_t seed = kDefaultSeed;
};

/// Largest observed ||V f||_q / ||f||_p over trial functions on the grid
/// (random piecewise constants, powers x^beta, near-deltas at 0 and, for
/// q = inf, the Hoelder extremal of the last node). For p = q = 2 the
/// largest singular value of the discretization is used instead.
double numeric_norm_lower(const ComplexOrder& order, double p, double q,
                          const NormProbeOptions& opt = {});

struct BoundReport {
  double p = 1.0;
  double q = 1.0;
  ComplexOrder order{1.0};
  bool in_domain = true;
  double theoretical = 0.0;
  double numeric_lower = 0.0;
  bool pass = true;  // numeric_lower <= theoretical (1 + tol)
};

BoundReport bound_report(const ComplexOrder& order, double p, double q, double tol = 0.02,
                         const NormProbeOptions& opt = {});

struct ExponentPair {
  double p, q;
};

/// Orders and (p, q) pairs of the default bound sweep.
std::vector<ComplexOrder> default_bound_orders();
std::vector<ExponentPair> default_exponent_pairs();

/// Gamma(t+1) * numeric_norm_lower(t, p, q): informational trend only.
double gamma_scaled_norm(double t, double p, double q, const NormProbeOptions& opt = {});

struct SemigroupResidual {
  double matrix = 0.0;       // ||M1 M2 - M12||_F / ||M12||_F
  double nodal = 0.0;        // relative sup over nodes >= 0.1 of apply(xi1, apply(xi2, x^n)) vs closed form
  double coefficient = 0.0;  // relative gap in the Gamma-ratio coefficient identity
};

SemigroupResidual semigroup_residual(const ComplexOrder& xi1, const ComplexOrder& xi2,
                                     std::size_t n, int monomial_degree = 2);

struct ContinuityGap {
  double lhs = 0.0;  // max over a 10^4-point grid of |x^(n+xi) - x^n|
  double rhs = 0.0;  // |xi| / (n + tau)
  bool holds() const { return lhs <= rhs * (1.0 + 1e-6); }
};

ContinuityGap strong_continuity_gap(const ComplexOrder& order, int n);

/// ||(x - .)^(xi-1) 1_{(0,x)}||_{p'} in closed form:
/// x^(tau - 1/p) / ((tau-1) p' + 1)^(1/p') for p > 1, x^(tau-1) for p = 1.
/// Finite iff tau > 1/p (tau >= 1 when p = 1).
double kernel_slice_norm(const ComplexOrder& order, double p, double x);

/// Same quantity by quadrature (p > 1) or grid maximization (p = 1).
double kernel_slice_norm_numeric(const ComplexOrder& order, double p, double x);

}  // namespace rlsg
