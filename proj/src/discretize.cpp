#include "rlsg/discretize.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "rlsg/kernels.hpp"
#include "rlsg/rl_core.hpp"

namespace rlsg {

OperatorMatrix::OperatorMatrix(ComplexOrder order, GridSpec grid, std::vector<Complex> entries,
                               Scheme scheme)
    : order_(order), grid_(grid), entries_(std::move(entries)), scheme_(scheme) {
  if (entries_.size() != grid_.size() * grid_.size()) {
    throw std::invalid_argument("operator matrix: entry count is not N*N");
  }
}

OperatorMatrix OperatorMatrix::zero(ComplexOrder order, GridSpec grid) {
  return OperatorMatrix(order, grid, std::vector<Complex>(grid.size() * grid.size()));
}

bool OperatorMatrix::lower_triangular() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((*this)(i, j) != Complex{}) return false;
    }
  }
  return true;
}

std::vector<Complex> OperatorMatrix::multiply(std::span<const Complex> v) const {
  if (v.size() != size()) throw std::invalid_argument("multiply: size mismatch");
  std::vector<Complex> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = kernels::dot(row(i), v);
  return out;
}

SampledFunction OperatorMatrix::multiply(const SampledFunction& f) const {
  if (!(f.grid == grid_)) throw std::invalid_argument("multiply: grid mismatch");
  return SampledFunction(grid_, multiply(std::span<const Complex>(f.values)));
}

double OperatorMatrix::frobenius_norm() const { return std::sqrt(kernels::sq_norm(entries_)); }

OperatorMatrix build_matrix(const ComplexOrder& order, const GridSpec& grid) {
  const std::size_t n = grid.size();
  if (n < 2) throw std::invalid_argument("build_matrix: requires N >= 2");
  const std::vector<Complex> w = cell_weights(order, grid);
  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex* row = m.data() + i * n;
    for (std::size_t j = 0; j <= i; ++j) row[j] = w[i - j];
  }
  return OperatorMatrix(order, grid, std::move(m));
}

OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("compose: grid mismatch");
  const std::size_t n = a.size();
  const bool lower = a.lower_triangular() && b.lower_triangular();
  std::vector<Complex> c(n * n);
  const std::span<Complex> cs(c);
  // Row i of C accumulates A(i,k) * row k of B.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k_end = lower ? i + 1 : n;
    std::span<Complex> ci = cs.subspan(i * n, n);
    for (std::size_t k = 0; k < k_end; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const std::size_t j_end = lower ? k + 1 : n;
      kernels::axpy(aik, b.row(k).first(j_end), ci.first(j_end));
    }
  }
  return OperatorMatrix(a.order() + b.order(), a.grid(), std::move(c), a.scheme());
}

double relative_frobenius_gap(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_frobenius_gap: size mismatch");
  double diff = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) diff += std::norm(da[k] - db[k]);
  return std::sqrt(diff) / b.frobenius_norm();
}

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// out[i] = sum_{j<=i} t[i-j] f[j] for i < n, with t[0] taken as zero, via
// circular convolution of length >= 2n.
std::vector<Complex> causal_toeplitz_convolve(std::span<const Complex> t,
                                              std::span<const Complex> f) {
  const std::size_t n = f.size();
  const std::size_t len = std::bit_ceil(2 * n);
  auto* a = fftw_alloc_complex(len);
  auto* b = fftw_alloc_complex(len);
  fftw_plan fa, fb, inv;
  {
    std::lock_guard lock(fftw_planner_mutex());
    fa = fftw_plan_dft_1d(static_cast<int>(len), a, a, FFTW_FORWARD, FFTW_ESTIMATE);
    fb = fftw_plan_dft_1d(static_cast<int>(len), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
    inv = fftw_plan_dft_1d(static_cast<int>(len), a, a, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  std::memset(a, 0, sizeof(fftw_complex) * len);
  std::memset(b, 0, sizeof(fftw_complex) * len);
  for (std::size_t k = 1; k < n; ++k) {
    a[k][0] = t[k].real();
    a[k][1] = t[k].imag();
  }
  for (std::size_t j = 0; j < n; ++j) {
    b[j][0] = f[j].real();
    b[j][1] = f[j].imag();
  }
  fftw_execute(fa);
  fftw_execute(fb);
  for (std::size_t k = 0; k < len; ++k) {
    const Complex p = Complex(a[k][0], a[k][1]) * Complex(b[k][0], b[k][1]);
    a[k][0] = p.real();
    a[k][1] = p.imag();
  }
  fftw_execute(inv);
  std::vector<Complex> out(n);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::size_t i = 0; i < n; ++i) out[i] = Complex(a[i][0], a[i][1]) * scale;
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(fa);
    fftw_destroy_plan(fb);
    fftw_destroy_plan(inv);
  }
  fftw_free(a);
  fftw_free(b);
  return out;
}

}  // namespace

SampledFunction fast_apply(const ComplexOrder& order, const SampledFunction& f) {
  const std::vector<Complex> w = cell_weights(order, f.grid);
  std::vector<Complex> out = causal_toeplitz_convolve(w, f.values);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[0] * f.values[i];
  return SampledFunction(f.grid, std::move(out));
}

SampledFunction fast_adjoint_apply(const ComplexOrder& order, const SampledFunction& f) {
  // Reversing the grid turns the anti-causal adjoint sum into a causal one.
  std::vector<Complex> w = cell_weights(order, f.grid);
  for (Complex& v : w) v = std::conj(v);
  std::vector<Complex> rev(f.values.rbegin(), f.values.rend());
  std::vector<Complex> out = causal_toeplitz_convolve(w, rev);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[0] * rev[i];
  std::reverse(out.begin(), out.end());
  return SampledFunction(f.grid, std::move(out));
}

namespace {

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
}

template <class T>
void put(std::ostream& os, T v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("matrix dump: truncated file");
  return to_little(v);
}

}  // namespace

void write_matrix_dump(const OperatorMatrix& m, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("matrix dump: cannot open " + path.string());
  os.write("RLSG", 4);
  put<std::uint32_t>(os, kDumpVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(m.size()));
  put<std::uint32_t>(os, 0);
  put<double>(os, m.order().xi().real());
  put<double>(os, m.order().xi().imag());
  for (const Complex& z : m.data()) {
    put<double>(os, z.real());
    put<double>(os, z.imag());
  }
  if (!os) throw std::runtime_error("matrix dump: write failed for " + path.string());
}

OperatorMatrix read_matrix_dump(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("matrix dump: cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "RLSG", 4) != 0) {
    throw std::runtime_error("matrix dump: bad magic in " + path.string());
  }
  const auto version = get<std::uint32_t>(is);
  if (version != kDumpVersion) throw std::runtime_error("matrix dump: unsupported version");
  const auto n = get<std::uint32_t>(is);
  get<std::uint32_t>(is);
  const double re = get<double>(is);
  const double im = get<double>(is);
  std::vector<Complex> entries(static_cast<std::size_t>(n) * n);
  for (Complex& z : entries) {
    const double zr = get<double>(is);
    const double zi = get<double>(is);
    z = Complex(zr, zi);
  }
  return OperatorMatrix(ComplexOrder(Complex(re, im)), GridSpec(n), std::move(entries));
}

}  // namespace rlsg
