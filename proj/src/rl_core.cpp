#include "rlsg/rl_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rlsg/kernels.hpp"
#include "rlsg/specfun.hpp"

namespace rlsg {

ComplexOrder::ComplexOrder(Complex xi) : xi_(xi), tau_(xi.real()) {
  if (!(tau_ > 0.0) || !std::isfinite(tau_) || !std::isfinite(xi.imag())) {
    std::ostringstream os;
    os << "order must lie in the right half-plane Re(xi) > 0, got xi = " << xi;
    throw DomainError(os.str());
  }
}

GridSpec::GridSpec(std::size_t n_cells) : n_(n_cells) {
  if (n_cells == 0) throw std::invalid_argument("grid needs at least one cell");
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

SampledFunction::SampledFunction(GridSpec g, std::vector<Complex> v, Interpretation how)
    : grid(g), values(std::move(v)), interpretation(how) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("sampled function: value count does not match grid");
  }
}

SampledFunction SampledFunction::zeros(GridSpec g) {
  return SampledFunction(g, std::vector<Complex>(g.size()));
}

double grid_norm(const SampledFunction& f, double p) {
  if (std::isinf(p)) return kernels::max_abs(f.values);
  if (p == 2.0) return std::sqrt(f.grid.h() * kernels::sq_norm(f.values));
  double s = 0.0;
  for (const Complex& v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(f.grid.h() * s, 1.0 / p);
}

Complex PowerImage::at(double x) const {
  if (x == 0.0) return exponent.real() > 0.0 ? Complex{} : coefficient;
  return coefficient * specfun::cpow_real_base(x, exponent);
}

Complex kernel(const ComplexOrder& order, double x, double u) {
  if (u >= x) return 0.0;
  return specfun::cpow_real_base(x - u, order.xi() - 1.0) / specfun::gamma(order.xi());
}

Complex kernel_weight(const ComplexOrder& order, double u) {
  return specfun::cpow_real_base(u, order.xi() - 1.0) / specfun::gamma(order.xi());
}

double l1_norm(const ComplexOrder& order) {
  return 1.0 / (order.tau() * std::abs(specfun::gamma(order.xi())));
}

double lr_norm(const ComplexOrder& order, double r) {
  if (!(r >= 1.0)) throw DomainError("lr_norm: requires r >= 1");
  const double tau = order.tau();
  const double g = std::abs(specfun::gamma(order.xi()));
  if (std::isinf(r)) {
    if (tau < 1.0) throw DomainError("lr_norm: phi is bounded only when Re(xi) >= 1");
    return 1.0 / g;
  }
  if (!(tau > 1.0 - 1.0 / r)) {
    std::ostringstream os;
    os << "lr_norm: phi lies in L^" << r << " only when Re(xi) > 1 - 1/r = " << 1.0 - 1.0 / r
       << ", got Re(xi) = " << tau;
    throw DomainError(os.str());
  }
  return 1.0 / (g * std::pow((tau - 1.0) * r + 1.0, 1.0 / r));
}

PowerImage apply_power(const ComplexOrder& order, Complex beta) {
  if (!(beta.real() > -1.0)) throw DomainError("apply_power: requires Re(beta) > -1");
  const Complex xi = order.xi();
  const Complex coef =
      std::exp(specfun::log_gamma(beta + 1.0) - specfun::log_gamma(beta + 1.0 + xi));
  return {coef, beta + xi};
}

PowerImage apply_monomial(const ComplexOrder& order, int n) {
  if (n < 0) throw DomainError("apply_monomial: requires n >= 0");
  return apply_power(order, static_cast<double>(n));
}

std::vector<Complex> cell_weights(const ComplexOrder& order, const GridSpec& grid) {
  const Complex xi = order.xi();
  const double h = grid.h();
  const std::size_t n = grid.size();
  // w[0] = (h/2)^xi / xi, w[k] = h^xi [(k+1/2)^xi - (k-1/2)^xi] / xi, all / Gamma(xi).
  const Complex scale = 1.0 / (xi * specfun::gamma(xi));
  const Complex h_xi = specfun::cpow_real_base(h, xi);
  std::vector<Complex> w(n);
  w[0] = specfun::cpow_real_base(0.5 * h, xi) * scale;
  for (std::size_t k = 1; k < n; ++k) {
    const double lo = static_cast<double>(k) - 0.5;
    const Complex lo_xi = specfun::cpow_real_base(lo, xi);
    // (k+1/2)^xi - (k-1/2)^xi = lo^xi expm1(xi log1p(1/lo))
    w[k] = h_xi * lo_xi * specfun::expm1(xi * std::log1p(1.0 / lo)) * scale;
  }
  return w;
}

SampledFunction apply(const ComplexOrder& order, const SampledFunction& f) {
  const std::size_t n = f.size();
  const std::vector<Complex> w = cell_weights(order, f.grid);
  std::vector<Complex> rev(w.rbegin(), w.rend());
  std::vector<Complex> out(n);
  const std::span<const Complex> fv(f.values);
  const std::span<const Complex> rv(rev);
  // out[i] = sum_{j<=i} f[j] w[i-j]; rev[n-1-i+j] = w[i-j].
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = kernels::dot(fv.first(i + 1), rv.subspan(n - 1 - i, i + 1));
  }
  return SampledFunction(f.grid, std::move(out));
}

SampledFunction adjoint_apply(const ComplexOrder& order, const SampledFunction& f) {
  const std::size_t n = f.size();
  std::vector<Complex> w = cell_weights(order, f.grid);
  for (Complex& v : w) v = std::conj(v);
  std::vector<Complex> out(n);
  const std::span<const Complex> fv(f.values);
  const std::span<const Complex> wv(w);
  // out[i] = sum_{j>=i} f[j] conj(w[j-i]).
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = kernels::dot(fv.subspan(i), wv.first(n - i));
  }
  return SampledFunction(f.grid, std::move(out));
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner_product: grid mismatch");
  Complex s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) s += f.values[j] * std::conj(g.values[j]);
  return s * f.grid.h();
}

CyclicityReport cyclicity_index(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw DomainError("cyclicity_index: requires p >= 1");
  const double peak = kernels::max_abs(f.values);
  const double floor = 1e-12 * peak;
  std::size_t first = f.size();
  if (peak > 0.0) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (std::abs(f.values[j]) > floor) {
        first = j;
        break;
      }
    }
  }
  CyclicityReport r;
  r.p_exponent = p;
  r.ell = static_cast<double>(first) * f.grid.h();
  r.cyclic = r.ell <= f.grid.h();
  return r;
}

}  // namespace rlsg
