#include "rlsg/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "rlsg/discretize.hpp"
#include "rlsg/quadrature.hpp"
#include "rlsg/rl_core.hpp"
#include "rlsg/specfun.hpp"
#include "rlsg/spectral.hpp"

namespace rlsg {
namespace {

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

std::string exp_str(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

double conjugate_exponent(double p) {
  if (!(p >= 1.0)) throw DomainError("conjugate exponent: requires p >= 1");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double bound_formula(const ComplexOrder& order, double p, double q) {
  if (!(p >= 1.0) || !(q >= p)) throw DomainError("bound_formula: requires 1 <= p <= q");
  const double tau = order.tau();
  const double g = std::abs(specfun::gamma(order.xi()));
  const double threshold = inv(p) - inv(q);
  auto fail = [&](const char* rel) {
    std::ostringstream os;
    os << "bound_formula: V_xi maps L^" << exp_str(p) << " boundedly into "
       << (std::isinf(q) ? std::string("C_0") : "L^" + exp_str(q)) << " only for Re(xi) " << rel
       << " " << threshold << ", got Re(xi) = " << tau;
    throw DomainError(os.str());
  };
  if (std::isinf(q)) {
    if (std::isinf(p)) return 1.0 / (tau * g);
    if (p == 1.0) {
      if (tau < 1.0) fail(">=");
      return 1.0 / g;
    }
    if (!(tau > threshold)) fail(">");
    const double pc = conjugate_exponent(p);
    return 1.0 / (g * std::pow((tau - 1.0) * pc + 1.0, 1.0 / pc));
  }
  if (!(tau > threshold)) fail(">");
  const double e = 1.0 - inv(p) + inv(q);
  return std::pow(e / (tau - threshold), e) / g;
}

double numeric_norm_lower(const ComplexOrder& order, double p, double q,
                          const NormProbeOptions& opt) {
  const GridSpec grid(opt.grid_size);
  if (p == 2.0 && q == 2.0) {
    return singular_values(build_matrix(order, grid)).values.front();
  }
  const std::size_t n = grid.size();
  double best = 0.0;
  auto probe = [&](const SampledFunction& f) {
    const double den = grid_norm(f, p);
    if (!(den > 0.0)) return;
    best = std::max(best, grid_norm(fast_apply(order, f), q) / den);
  };

  probe(SampledFunction::sample(grid, [](double) { return Complex(1.0); }));
  for (double beta : {0.5, 1.0, 2.0, 4.0}) {
    probe(SampledFunction::sample(grid, [beta](double x) { return Complex(std::pow(x, beta)); }));
  }
  if (!std::isinf(p)) {
    for (double frac : {0.5, 0.9}) {
      const double beta = -frac / p;
      probe(SampledFunction::sample(grid, [beta](double x) { return Complex(std::pow(x, beta)); }));
    }
  }
  for (std::size_t k : {1, 2, 4, 8, 16, 64}) {
    if (k > n) break;
    std::vector<Complex> v(n);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), Complex(1.0));
    probe(SampledFunction(grid, std::move(v)));
  }
  if (std::isinf(q) && p > 1.0 && !std::isinf(p)) {
    // Hoelder extremal for evaluation at the last node.
    const double pc = conjugate_exponent(p);
    const double x_star = grid.node(n - 1);
    std::vector<Complex> v(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const Complex k = kernel(order, x_star, grid.node(j));
      const double a = std::abs(k);
      v[j] = a > 0.0 ? std::conj(k) * std::pow(a, pc - 2.0) : Complex{};
    }
    probe(SampledFunction(grid, std::move(v)));
  }
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  for (int t = 0; t < opt.trials; ++t) {
    std::vector<Complex> v(n);
    for (Complex& z : v) {
      const double re = normal(rng);
      z = Complex(re, normal(rng));
    }
    probe(SampledFunction(grid, std::move(v)));
  }
  return best;
}

BoundReport bound_report(const ComplexOrder& order, double p, double q, double tol,
                         const NormProbeOptions& opt) {
  BoundReport r{.p = p, .q = q, .order = order};
  try {
    r.theoretical = bound_formula(order, p, q);
  } catch (const DomainError&) {
    r.in_domain = false;
    r.pass = true;
    return r;
  }
  r.numeric_lower = numeric_norm_lower(order, p, q, opt);
  r.pass = r.numeric_lower <= r.theoretical * (1.0 + tol);
  return r;
}

std::vector<ComplexOrder> default_bound_orders() {
  return {ComplexOrder(0.3), ComplexOrder(0.6, 0.4), ComplexOrder(1.0), ComplexOrder(2.0)};
}

std::vector<ExponentPair> default_exponent_pairs() {
  return {{1.0, 1.0}, {1.0, 2.0}, {2.0, 2.0}, {2.0, std::numeric_limits<double>::infinity()}};
}

double gamma_scaled_norm(double t, double p, double q, const NormProbeOptions& opt) {
  return std::tgamma(t + 1.0) * numeric_norm_lower(ComplexOrder(t), p, q, opt);
}

SemigroupResidual semigroup_residual(const ComplexOrder& xi1, const ComplexOrder& xi2,
                                     std::size_t n, int monomial_degree) {
  if (n < 16) throw std::invalid_argument("semigroup_residual: requires N >= 16");
  const GridSpec grid(n);
  const ComplexOrder sum = xi1 + xi2;
  SemigroupResidual r;
  r.matrix = relative_frobenius_gap(compose(build_matrix(xi1, grid), build_matrix(xi2, grid)),
                                    build_matrix(sum, grid));

  const int d = monomial_degree;
  const SampledFunction f =
      SampledFunction::sample(grid, [d](double x) { return Complex(std::pow(x, d)); });
  const SampledFunction twice = apply(xi1, apply(xi2, f));
  const PowerImage exact = apply_monomial(sum, d);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (grid.node(i) < 0.1) continue;
    const Complex e = exact.at(grid.node(i));
    num = std::max(num, std::abs(twice.values[i] - e));
    den = std::max(den, std::abs(e));
  }
  r.nodal = num / den;

  const PowerImage first = apply_monomial(xi2, d);
  const PowerImage second = apply_power(xi1, first.exponent);
  const Complex chained = first.coefficient * second.coefficient;
  r.coefficient = std::abs(chained - exact.coefficient) / std::abs(exact.coefficient);
  return r;
}

ContinuityGap strong_continuity_gap(const ComplexOrder& order, int n) {
  if (n < 1) throw DomainError("strong_continuity_gap: requires n >= 1");
  constexpr int kPoints = 10000;
  const Complex xi = order.xi();
  ContinuityGap g;
  for (int k = 1; k < kPoints; ++k) {
    const double x = static_cast<double>(k) / (kPoints - 1);
    const double xn = std::pow(x, n);
    g.lhs = std::max(g.lhs, std::abs(xn * specfun::cpow_real_base(x, xi) - xn));
  }
  g.rhs = std::abs(xi) / (n + order.tau());
  return g;
}

namespace {

void check_slice_domain(const ComplexOrder& order, double p, double x) {
  if (!(p >= 1.0)) throw DomainError("kernel_slice_norm: requires p >= 1");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("kernel_slice_norm: requires 0 < x < 1");
  const double tau = order.tau();
  const bool ok = p == 1.0 ? tau >= 1.0 : tau > inv(p);
  if (!ok) {
    std::ostringstream os;
    os << "kernel_slice_norm: the kernel slice lies in L^p' (order boundedness on L^"
       << exp_str(p) << ") only for Re(xi) " << (p == 1.0 ? ">= 1" : "> 1/p = " + exp_str(inv(p)))
       << ", got Re(xi) = " << tau;
    throw DomainError(os.str());
  }
}

}  // namespace

double kernel_slice_norm(const ComplexOrder& order, double p, double x) {
  check_slice_domain(order, p, x);
  const double tau = order.tau();
  if (p == 1.0) return std::pow(x, tau - 1.0);
  const double pc = conjugate_exponent(p);
  return std::pow(x, tau - inv(p)) / std::pow((tau - 1.0) * pc + 1.0, 1.0 / pc);
}

double kernel_slice_norm_numeric(const ComplexOrder& order, double p, double x) {
  check_slice_domain(order, p, x);
  const double tau = order.tau();
  if (p == 1.0) {
    constexpr int kPoints = 10000;
    double m = 0.0;
    for (int k = 1; k <= kPoints; ++k) {
      m = std::max(m, std::pow(x * k / kPoints, tau - 1.0));
    }
    return m;
  }
  const double pc = conjugate_exponent(p);
  const double e = (tau - 1.0) * pc;
  const quad::Result r =
      quad::tanh_sinh([e](double s) { return Complex(std::pow(s, e)); }, 0.0, x, {1e-15, 1e-12});
  return std::pow(r.value.real(), 1.0 / pc);
}

}  // namespace rlsg
