#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlsg {

using Complex = std::complex<double>;

/// Raised when an argument lies outside the region where a formula holds.
/// The message names the violated threshold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Order of the fractional integral, restricted to the open right half-plane.
class ComplexOrder {
 public:
  explicit ComplexOrder(Complex xi);
  ComplexOrder(double re, double im = 0.0) : ComplexOrder(Complex{re, im}) {}

  Complex xi() const { return xi_; }
  double tau() const { return tau_; }

  friend ComplexOrder operator+(const ComplexOrder& a, const ComplexOrder& b) {
    return ComplexOrder(a.xi_ + b.xi_);
  }
  bool operator==(const ComplexOrder&) const = default;

 private:
  Complex xi_;
  double tau_;
};

/// Uniform cell grid on (0,1): edges j/N, nodes at cell midpoints.
class GridSpec {
 public:
  explicit GridSpec(std::size_t n_cells);

  std::size_t size() const { return n_; }
  double h() const { return 1.0 / static_cast<double>(n_); }
  double edge(std::size_t j) const { return static_cast<double>(j) * h(); }
  double node(std::size_t j) const { return (static_cast<double>(j) + 0.5) * h(); }
  std::vector<double> nodes() const;

  bool operator==(const GridSpec&) const = default;

 private:
  std::size_t n_;
};

enum class Interpretation { kPiecewiseConstant, kPointSamples };

/// A function on (0,1) known through its values at the grid nodes.
struct SampledFunction {
  SampledFunction(GridSpec g, std::vector<Complex> v,
                  Interpretation how = Interpretation::kPiecewiseConstant);

  static SampledFunction zeros(GridSpec g);
  template <class F>
  static SampledFunction sample(GridSpec g, F&& f) {
    std::vector<Complex> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = f(g.node(j));
    return SampledFunction(g, std::move(v), Interpretation::kPointSamples);
  }

  std::size_t size() const { return values.size(); }

  GridSpec grid;
  std::vector<Complex> values;
  Interpretation interpretation;
};

/// Grid norms: (h sum |v|^p)^(1/p), and max |v| for p = infinity.
double grid_norm(const SampledFunction& f, double p);

}  // namespace rlsg
