#pragma once
// Singular spectra of discretized operators and Schatten-class diagnostics.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlsg/discretize.hpp"
#include "rlsg/types.hpp"

namespace rlsg {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-increasing, non-negative singular values.
struct SingularSpectrum {
  std::vector<double> values;
  std::size_t matrix_size = 0;
  std::optional<ComplexOrder> order;

  std::size_t size() const { return values.size(); }
  /// 1-based access, s_1 >= s_2 >= ...
  double s(std::size_t n) const { return values.at(n - 1); }
};

/// Singular values of a dense row-major complex matrix (divide-and-conquer
/// bidiagonal SVD). Throws ConvergenceError with the LAPACK info code.
SingularSpectrum singular_values(std::span<const Complex> row_major, std::size_t rows,
                                 std::size_t cols);
SingularSpectrum singular_values(const OperatorMatrix& m);

/// (sum s_n^r)^(1/r); r = infinity gives s_1.
double schatten_norm(const SingularSpectrum& s, double r);

/// Closed-form Hilbert-Schmidt norm 1 / (|Gamma(xi)| sqrt(2 tau (2 tau - 1))).
/// Throws DomainError unless tau > 1/2.
double hs_norm_exact(const ComplexOrder& order);

/// 1-based inclusive index window.
struct FitWindow {
  std::size_t n_min = 8;
  std::size_t n_max = 0;
};

/// Default window (8, N/8).
FitWindow default_window(std::size_t matrix_size);

struct DecayFit {
  double slope = 0.0;      // positive decay exponent: s_n ~ C n^-slope
  double constant = 0.0;   // C
  double residual = 0.0;   // RMS of the log-log fit
};

/// Least-squares fit of log s_n against log n over the window. Requires
/// n_max <= matrix_size / 8, n_max - n_min >= 10 and positive s_n.
DecayFit decay_fit(const SingularSpectrum& s, FitWindow window);

enum class Membership { kMember, kNonMember, kBoundary };
std::string to_string(Membership m);

struct SchattenVerdict {
  ComplexOrder order;
  double r = 1.0;
  std::size_t matrix_size = 0;
  double estimated_exponent = 0.0;
  double threshold = 1.0;  // 1/r
  double constant = 0.0;
  Membership verdict = Membership::kBoundary;
  FitWindow fit_window{};
  double fit_residual = 0.0;
  double delta = 0.05;
  bool exact_member = false;  // tau > 1/r

  /// False only when the verdict contradicts the exact threshold while
  /// |tau r - 1| >= band * r.
  bool consistent(double band = 0.2) const;
};

struct SchattenOptions {
  double delta = 0.05;
  std::optional<FitWindow> window;
};

/// Classifies an already computed spectrum of V_xi.
SchattenVerdict classify_spectrum(const SingularSpectrum& s, const ComplexOrder& order, double r,
                                  const SchattenOptions& opt = {});

/// build_matrix -> singular_values -> decay_fit -> verdict.
SchattenVerdict classify_schatten(const ComplexOrder& order, double r, std::size_t n,
                                  const SchattenOptions& opt = {});

/// Analytic family T_z = Gamma(z) Gamma(z/2)^2 V_z on the strip
/// alpha0 <= Re z <= alpha1, with target exponent 1/p = theta/p1 + (1-theta)/p0.
class InterpolationSpec {
 public:
  InterpolationSpec(double alpha0, double alpha1, double p0, double p1, double theta);

  double alpha0() const { return alpha0_; }
  double alpha1() const { return alpha1_; }
  double p0() const { return p0_; }
  double p1() const { return p1_; }
  double theta() const { return theta_; }
  double alpha() const { return theta_ * alpha1_ + (1.0 - theta_) * alpha0_; }
  double p() const;

 private:
  double alpha0_, alpha1_, p0_, p1_, theta_;
};

struct InterpolationRow {
  double sigma = 0.0;
  double norm = 0.0;  // discretized ||T_{alpha + i sigma}||_{S^p}
  bool violation = false;
};

struct InterpolationReport {
  double s0 = 0.0;
  double s1 = 0.0;
  double bound = 0.0;  // s0^(1-theta) s1^theta
  double tolerance = 0.05;
  std::size_t matrix_size = 0;
  std::vector<InterpolationRow> rows;
  bool any_violation = false;
};

/// Discretized ||T_z||_{S^p} at N.
double interpolation_family_norm(Complex z, double p, std::size_t n);

/// Checks sup_{Re z = alpha} ||T_z||_{S^p} <= S0^(1-theta) S1^theta, with S0, S1
/// the maxima over 9 equispaced sigma in [-4, 4] on each edge.
InterpolationReport interpolation_check(const InterpolationSpec& spec,
                                        std::span<const double> sigma_samples, std::size_t n,
                                        double tolerance = 0.05);

}  // namespace rlsg
