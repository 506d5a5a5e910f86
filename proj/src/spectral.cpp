#include "rlsg/spectral.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rlsg/parallel.hpp"
#include "rlsg/specfun.hpp"

namespace rlsg {

SingularSpectrum singular_values(std::span<const Complex> row_major, std::size_t rows,
                                 std::size_t cols) {
  if (row_major.size() != rows * cols) {
    throw std::invalid_argument("singular_values: buffer size does not match shape");
  }
  SingularSpectrum out;
  out.matrix_size = std::max(rows, cols);
  if (rows == 0 || cols == 0) return out;
  for (const Complex& z : row_major) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("singular_values: non-finite matrix entry");
    }
  }
  // A row-major rows x cols buffer is the column-major cols x rows transpose,
  // which has the same singular values.
  std::vector<Complex> a(row_major.begin(), row_major.end());
  out.values.assign(std::min(rows, cols), 0.0);
  const auto m = static_cast<lapack_int>(cols);
  const auto n = static_cast<lapack_int>(rows);
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m,
                                         out.values.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    std::ostringstream os;
    os << "singular_values: zgesdd failed for a " << rows << "x" << cols << " matrix, info = "
       << info << (info > 0 ? " (bidiagonal divide-and-conquer did not converge)"
                            : " (illegal argument)");
    throw ConvergenceError(os.str());
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

SingularSpectrum singular_values(const OperatorMatrix& m) {
  SingularSpectrum s = singular_values(m.data(), m.size(), m.size());
  s.order = m.order();
  return s;
}

double schatten_norm(const SingularSpectrum& s, double r) {
  if (!(r >= 1.0)) throw DomainError("schatten_norm: requires r >= 1");
  if (s.values.empty()) return 0.0;
  if (std::isinf(r)) return s.values.front();
  const double top = s.values.front();
  if (top == 0.0) return 0.0;
  // Scale by s_1 and sum smallest first.
  double sum = 0.0;
  for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) sum += std::pow(*it / top, r);
  return top * std::pow(sum, 1.0 / r);
}

double hs_norm_exact(const ComplexOrder& order) {
  const double tau = order.tau();
  if (!(tau > 0.5)) {
    std::ostringstream os;
    os << "hs_norm_exact: V_xi is Hilbert-Schmidt if and only if Re(xi) > 1/2, got Re(xi) = "
       << tau;
    throw DomainError(os.str());
  }
  return 1.0 / (std::abs(specfun::gamma(order.xi())) * std::sqrt(2.0 * tau * (2.0 * tau - 1.0)));
}

FitWindow default_window(std::size_t matrix_size) { return {8, matrix_size / 8}; }

DecayFit decay_fit(const SingularSpectrum& s, FitWindow w) {
  const std::size_t n_total = s.matrix_size ? s.matrix_size : s.values.size();
  if (w.n_min < 1 || w.n_max > n_total / 8 || w.n_max < w.n_min + 10 || w.n_max > s.size()) {
    std::ostringstream os;
    os << "decay_fit: window (" << w.n_min << ", " << w.n_max << ") must satisfy n_min >= 1, "
       << "n_max - n_min >= 10 and n_max <= N/8 = " << n_total / 8;
    throw std::invalid_argument(os.str());
  }
  const std::size_t m = w.n_max - w.n_min + 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(m), ly(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t n = w.n_min + k;
    const double v = s.s(n);
    if (!(v > 0.0)) throw std::invalid_argument("decay_fit: non-positive singular value in window");
    lx[k] = std::log(static_cast<double>(n));
    ly[k] = std::log(v);
    sx += lx[k];
    sy += ly[k];
  }
  const double mx = sx / static_cast<double>(m), my = sy / static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
  }
  const double b = sxy / sxx;
  const double a = my - b * mx;
  double rss = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double e = ly[k] - (a + b * lx[k]);
    rss += e * e;
  }
  return {-b, std::exp(a), std::sqrt(rss / static_cast<double>(m))};
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::kMember: return "member";
    case Membership::kNonMember: return "non-member";
    case Membership::kBoundary: return "boundary";
  }
  return "boundary";
}

bool SchattenVerdict::consistent(double band) const {
  const double gap = order.tau() * r - 1.0;
  if (std::abs(gap) < band * r) return true;
  return verdict == (gap > 0 ? Membership::kMember : Membership::kNonMember);
}

SchattenVerdict classify_spectrum(const SingularSpectrum& s, const ComplexOrder& order, double r,
                                  const SchattenOptions& opt) {
  if (!(r >= 1.0)) throw DomainError("classify_schatten: requires r >= 1");
  const FitWindow w = opt.window.value_or(default_window(s.matrix_size));
  const DecayFit fit = decay_fit(s, w);
  SchattenVerdict v{.order = order};
  v.r = r;
  v.matrix_size = s.matrix_size;
  v.estimated_exponent = fit.slope;
  v.threshold = 1.0 / r;
  v.constant = fit.constant;
  v.fit_window = w;
  v.fit_residual = fit.residual;
  v.delta = opt.delta;
  v.exact_member = order.tau() > 1.0 / r;
  const double x = fit.slope * r;
  if (x > 1.0 + opt.delta) {
    v.verdict = Membership::kMember;
  } else if (x < 1.0 - opt.delta) {
    v.verdict = Membership::kNonMember;
  } else {
    v.verdict = Membership::kBoundary;
  }
  return v;
}

SchattenVerdict classify_schatten(const ComplexOrder& order, double r, std::size_t n,
                                  const SchattenOptions& opt) {
  if (!(r >= 1.0)) throw DomainError("classify_schatten: requires r >= 1");
  const SingularSpectrum s = singular_values(build_matrix(order, GridSpec(n)));
  return classify_spectrum(s, order, r, opt);
}

InterpolationSpec::InterpolationSpec(double alpha0, double alpha1, double p0, double p1,
                                     double theta)
    : alpha0_(alpha0), alpha1_(alpha1), p0_(p0), p1_(p1), theta_(theta) {
  if (!(alpha0 > 0.0) || !(alpha0 < alpha1)) {
    throw DomainError("interpolation: requires 0 < alpha0 < alpha1");
  }
  if (!(p1 >= 1.0) || !(p1 < p0)) throw DomainError("interpolation: requires 1 <= p1 < p0");
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("interpolation: requires theta in [0,1]");
}

double InterpolationSpec::p() const {
  const double inv = theta_ / p1_ + (1.0 - theta_) / p0_;  // 1/inf == 0
  return inv == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv;
}

double interpolation_family_norm(Complex z, double p, std::size_t n) {
  const ComplexOrder order(z);
  const Complex g2 = specfun::gamma(0.5 * z);
  const double scale = std::abs(specfun::gamma(z) * g2 * g2);
  return scale * schatten_norm(singular_values(build_matrix(order, GridSpec(n))), p);
}

InterpolationReport interpolation_check(const InterpolationSpec& spec,
                                        std::span<const double> sigma_samples, std::size_t n,
                                        double tolerance) {
  constexpr int kEdgePoints = 9;
  constexpr double kSigmaMax = 4.0;
  InterpolationReport rep;
  rep.tolerance = tolerance;
  rep.matrix_size = n;

  const std::size_t n_edge = 2 * kEdgePoints;
  const std::size_t total = n_edge + sigma_samples.size();
  const std::function<double(std::size_t)> task = [&](std::size_t k) -> double {
    if (k < n_edge) {
      const bool upper = k >= kEdgePoints;
      const int idx = static_cast<int>(k % kEdgePoints);
      const double sigma = -kSigmaMax + 2.0 * kSigmaMax * idx / (kEdgePoints - 1);
      return upper ? interpolation_family_norm({spec.alpha1(), sigma}, spec.p1(), n)
                   : interpolation_family_norm({spec.alpha0(), sigma}, spec.p0(), n);
    }
    return interpolation_family_norm({spec.alpha(), sigma_samples[k - n_edge]}, spec.p(), n);
  };
  const std::vector<double> norms = parallel_map<double>(total, task);

  rep.s0 = *std::max_element(norms.begin(), norms.begin() + kEdgePoints);
  rep.s1 = *std::max_element(norms.begin() + kEdgePoints, norms.begin() + n_edge);
  rep.bound = std::pow(rep.s0, 1.0 - spec.theta()) * std::pow(rep.s1, spec.theta());
  for (std::size_t k = 0; k < sigma_samples.size(); ++k) {
    InterpolationRow row{sigma_samples[k], norms[n_edge + k], false};
    row.violation = row.norm > rep.bound * (1.0 + tolerance);
    rep.any_violation = rep.any_violation || row.violation;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace rlsg
