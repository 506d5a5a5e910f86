#pragma once
// Dense Nystrom discretization of V on L2(0,1).

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rlsg/types.hpp"

namespace rlsg {

enum class Scheme { kProductIntegrationMidpoint };

/// Row-major N x N complex matrix whose entries are the product-integration
/// weights of the operator: (M f)_i approximates (V f)(x_i).
///
/// Because the weights already carry the cell width, M acts on coefficient
/// vectors the way V acts on piecewise-constant functions, its singular
/// values approximate those of V on L2(0,1), and ||M||_F approximates the
/// L2((0,1)^2) norm of the kernel. Immutable once built.
class OperatorMatrix {
 public:
  OperatorMatrix(ComplexOrder order, GridSpec grid, std::vector<Complex> entries,
                 Scheme scheme = Scheme::kProductIntegrationMidpoint);

  static OperatorMatrix zero(ComplexOrder order, GridSpec grid);

  std::size_t size() const { return grid_.size(); }
  const ComplexOrder& order() const { return order_; }
  const GridSpec& grid() const { return grid_; }
  Scheme scheme() const { return scheme_; }

  Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  std::span<const Complex> row(std::size_t i) const {
    return std::span<const Complex>(entries_).subspan(i * size(), size());
  }
  std::span<const Complex> data() const { return entries_; }

  /// True when every entry above the diagonal is zero.
  bool lower_triangular() const;

  std::vector<Complex> multiply(std::span<const Complex> v) const;
  SampledFunction multiply(const SampledFunction& f) const;

  double frobenius_norm() const;

 private:
  ComplexOrder order_;
  GridSpec grid_;
  std::vector<Complex> entries_;
  Scheme scheme_;
};

/// Row i holds the exact cell moments of the kernel at node x_i; equals
/// rl_core's apply on piecewise-constant inputs.
OperatorMatrix build_matrix(const ComplexOrder& order, const GridSpec& grid);

/// Discretization of the product A B. The quadrature weight is already in
/// the entries, so this is the plain matrix product. The order tag of the
/// result is the sum of the operand orders.
OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b);

/// Relative Frobenius distance ||A - B||_F / ||B||_F.
double relative_frobenius_gap(const OperatorMatrix& a, const OperatorMatrix& b);

/// Same result as apply() in O(N log N): the off-node moments form a
/// Toeplitz sequence handled by zero-padded FFT convolution, and the
/// half-cell moment at the node is added as a diagonal correction.
SampledFunction fast_apply(const ComplexOrder& order, const SampledFunction& f);

/// Adjoint counterpart of fast_apply.
SampledFunction fast_adjoint_apply(const ComplexOrder& order, const SampledFunction& f);

// Binary matrix dump, little-endian:
//   offset  0  char[4] "RLSG"
//   offset  4  u32     format version (1)
//   offset  8  u32     N
//   offset 12  u32     reserved, zero
//   offset 16  f64     Re(xi)
//   offset 24  f64     Im(xi)
//   offset 32  N*N (f64 re, f64 im) pairs, row-major
inline constexpr std::uint32_t kDumpVersion = 1;
void write_matrix_dump(const OperatorMatrix& m, const std::filesystem::path& path);
OperatorMatrix read_matrix_dump(const std::filesystem::path& path);

}  // namespace rlsg
