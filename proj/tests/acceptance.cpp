// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "rlsg/asymptotics.hpp"
#include "rlsg/discretize.hpp"
#include "rlsg/laws.hpp"
#include "rlsg/rl_core.hpp"
#include "rlsg/specfun.hpp"
#include "rlsg/spectral.hpp"

using namespace rlsg;

namespace {

// Tolerances.
constexpr double kHsGap = 0.02;
constexpr double kSchattenBand = 0.2;
constexpr double kSlopeBand = 0.1;
constexpr double kDiagRatio = 0.05;
constexpr double kDiagUnit = 1e-10;
constexpr double kSemigroupResidual = 2e-2;
constexpr double kCoefficientResidual = 1e-12;
constexpr double kBoundSlack = 0.02;
constexpr double kTopSingular = 0.01;
constexpr double kInterpTolerance = 0.05;
constexpr double kPsiAgreement = 1e-9;
constexpr double kDuality = 1e-8;
constexpr double kRecurrence = 1e-11;
constexpr double kConjugation = 1e-12;

std::map<std::pair<std::pair<double, double>, std::size_t>, SingularSpectrum> g_cache;

const SingularSpectrum& spectrum(Complex xi, std::size_t n) {
  const auto key = std::make_pair(std::make_pair(xi.real(), xi.imag()), n);
  auto it = g_cache.find(key);
  if (it == g_cache.end()) {
    it = g_cache.emplace(key, singular_values(build_matrix(ComplexOrder(xi), GridSpec(n)))).first;
  }
  return it->second;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << std::showpos << z.imag() << "i";
  return os.str();
}

Outcome hilbert_schmidt() {
  std::ostringstream os;
  bool ok = true;
  for (Complex xi : {Complex(0.75), Complex(1.0), Complex(1.5), Complex(0.8, 0.6)}) {
    const double exact = hs_norm_exact(ComplexOrder(xi));
    double prev = INFINITY, last = 0.0;
    for (std::size_t n : {512u, 1024u, 2048u}) {
      const double gap = std::abs(schatten_norm(spectrum(xi, n), 2.0) - exact) / exact;
      ok = ok && gap < prev;
      prev = last = gap;
    }
    ok = ok && last <= kHsGap;
    os << " xi=" << fmt(xi) << " gap@2048=" << std::setprecision(3) << last;
  }
  return {ok, os.str()};
}

Outcome schatten_threshold() {
  int checked = 0, wrong = 0, boundary = 0;
  std::ostringstream bad;
  for (double xi : {0.4, 0.55, 0.75, 1.0, 1.3}) {
    for (double r : {1.0, 2.0, 4.0}) {
      const SchattenVerdict v = classify_spectrum(spectrum(xi, 2048), ComplexOrder(xi), r);
      const double margin = xi - 1.0 / r;
      if (std::abs(margin) < kSchattenBand) {
        ++boundary;
        continue;
      }
      ++checked;
      const Membership want = margin > 0 ? Membership::kMember : Membership::kNonMember;
      if (v.verdict != want) {
        ++wrong;
        bad << " (" << xi << "," << r << ")->" << to_string(v.verdict);
      }
    }
  }
  std::ostringstream os;
  os << " " << checked << " decided cases, " << wrong << " misclassified, " << boundary
     << " in the boundary band" << bad.str();
  return {wrong == 0, os.str()};
}

Outcome decay_exponent() {
  bool ok = true;
  std::ostringstream os;
  for (double xi : {0.5, 0.75, 1.0, 1.5}) {
    const double slope = decay_fit(spectrum(xi, 2048), {8, 256}).slope;
    ok = ok && std::abs(slope - xi) <= kSlopeBand;
    os << " xi=" << xi << " slope=" << std::setprecision(4) << slope;
  }
  return {ok, os.str()};
}

Outcome fourier_diagonal() {
  bool ok = true;
  std::ostringstream os;
  for (Complex xi : {Complex(0.3), Complex(0.6, 0.3), Complex(1.0)}) {
    const auto r = diagonal_report(ComplexOrder(xi), FourierMode(10000));
    const double dev = std::abs(r.ratio - 1.0);
    ok = ok && dev <= kDiagRatio;
    os << " xi=" << fmt(xi) << " |ratio-1|=" << std::setprecision(3) << dev;
  }
  double worst = 0.0;
  for (long n = 1; n <= 100000; n = n < 10 ? n + 1 : n * 3) {
    const Complex ref = 1.0 / Complex(0.0, 2.0 * std::numbers::pi * n);
    worst = std::max(worst, std::abs(diagonal_exact(1.0, FourierMode(n)) / ref - 1.0));
  }
  ok = ok && worst <= kDiagUnit;
  os << " unit-order worst=" << worst;
  return {ok, os.str()};
}

Outcome semigroup() {
  bool ok = true;
  std::ostringstream os;
  for (auto [a, b] : {std::pair{Complex(0.5), Complex(0.5)}, std::pair{Complex(0.3), Complex(0.7)},
                      std::pair{Complex(0.4, 0.2), Complex(0.6, -0.2)}}) {
    double prev = INFINITY;
    SemigroupResidual last;
    for (std::size_t n : {256u, 512u, 1024u}) {
      last = semigroup_residual(ComplexOrder(a), ComplexOrder(b), n);
      ok = ok && last.matrix < prev && last.coefficient <= kCoefficientResidual;
      prev = last.matrix;
    }
    ok = ok && last.matrix <= kSemigroupResidual;
    os << " (" << fmt(a) << "," << fmt(b) << ") residual@1024=" << std::setprecision(3)
       << last.matrix << " coef=" << last.coefficient;
  }
  return {ok, os.str()};
}

// Largest singular value by power iteration on M* M using the FFT products.
double top_singular_value(const ComplexOrder& o, std::size_t n) {
  const GridSpec g(n);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  SampledFunction f(g, v);
  double s = 0.0;
  for (int it = 0; it < 60; ++it) {
    const double nf = grid_norm(f, 2.0);
    for (auto& x : f.values) x /= nf;
    const auto mf = fast_apply(o, f);
    s = grid_norm(mf, 2.0);
    f = fast_adjoint_apply(o, mf);
  }
  return s;
}

Outcome norm_bounds() {
  bool ok = true;
  int cases = 0, skipped = 0;
  double worst = 0.0;
  for (const auto& o : default_bound_orders()) {
    for (auto [p, q] : default_exponent_pairs()) {
      const BoundReport r = bound_report(o, p, q, kBoundSlack);
      if (!r.in_domain) {
        ++skipped;
        continue;
      }
      ++cases;
      ok = ok && r.pass;
      worst = std::max(worst, r.numeric_lower / r.theoretical);
    }
  }
  const double s1 = numeric_norm_lower(1.0, 2.0, 2.0);
  const double oracle = top_singular_value(1.0, 4096);
  const double two_over_pi = 2.0 / std::numbers::pi;
  ok = ok && std::abs(s1 - two_over_pi) <= kTopSingular * two_over_pi &&
       std::abs(oracle - two_over_pi) <= kTopSingular * two_over_pi;
  std::ostringstream os;
  os << " " << cases << " in-domain cases (" << skipped << " outside), max numeric/bound="
     << std::setprecision(4) << worst << "; s1=" << s1 << " power-iteration@4096=" << oracle
     << " 2/pi=" << two_over_pi;
  return {ok, os.str()};
}

Outcome strong_continuity() {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> tau(0.0, 2.0), im(-3.0, 3.0);
  std::uniform_int_distribution<int> nn(1, 20);
  int fails = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    double re = tau(rng);
    if (re == 0.0) re = 2.0;  // (0, 2]
    const auto g = strong_continuity_gap(ComplexOrder(re, im(rng)), nn(rng));
    if (!g.holds()) ++fails;
    worst = std::max(worst, g.lhs / g.rhs);
  }
  std::ostringstream os;
  os << " 100 random cases, " << fails << " failures, max lhs/rhs=" << std::setprecision(4)
     << worst;
  return {fails == 0, os.str()};
}

Outcome interpolation() {
  const InterpolationSpec spec(0.25, 1.25, INFINITY, 1.0, 0.5);
  const std::vector<double> sigma = {0.0, 0.5, 1.0};
  const auto rep = interpolation_check(spec, sigma, 512, kInterpTolerance);
  std::ostringstream os;
  double worst = 0.0;
  for (const auto& r : rep.rows) worst = std::max(worst, r.norm);
  os << " bound=" << std::setprecision(4) << rep.bound << " max ||T||_S2=" << worst;
  return {!rep.any_violation, os.str()};
}

Outcome oracle_layer() {
  std::mt19937_64 rng(kDefaultSeed + 9);
  std::uniform_real_distribution<double> are(-0.9, 1.0), aim(-1.0, 1.0);
  std::uniform_int_distribution<long> nn(1, 1000);
  double psi = 0.0;
  for (int t = 0; t < 50; ++t) {
    const Complex a(are(rng), aim(rng));
    const FourierMode n(nn(rng));
    psi = std::max(psi, std::abs(psi_hat(a, n) - psi_hat_direct(a, n)));
  }

  std::uniform_real_distribution<double> xre(0.05, 2.5), xim(-2.0, 2.0);
  std::normal_distribution<double> d;
  const GridSpec g(1024);
  double dual = 0.0;
  for (int t = 0; t < 50; ++t) {
    const ComplexOrder o(xre(rng), xim(rng));
    std::vector<Complex> a(g.size()), b(g.size());
    for (auto& x : a) x = {d(rng), d(rng)};
    for (auto& x : b) x = {d(rng), d(rng)};
    const SampledFunction f(g, a), h(g, b);
    const Complex lhs = inner_product(apply(o, f), h);
    const Complex rhs = inner_product(f, adjoint_apply(o, h));
    dual = std::max(dual, std::abs(lhs - rhs) / std::abs(lhs));
  }

  std::uniform_real_distribution<double> zre(0.1, 10.0), zim(-10.0, 10.0);
  double rec = 0.0, conj = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Complex z(zre(rng), zim(rng));
    const Complex g1 = specfun::gamma(z + 1.0), g0 = specfun::gamma(z);
    rec = std::max(rec, std::abs(g1 - z * g0) / std::abs(g1));
    conj = std::max(conj, std::abs(specfun::gamma(std::conj(z)) - std::conj(g0)) / std::abs(g0));
  }
  std::ostringstream os;
  os << std::setprecision(3) << " psi dual-path max=" << psi << " duality max=" << dual
     << " recurrence max=" << rec << " conjugation max=" << conj;
  return {psi <= kPsiAgreement && dual <= kDuality && rec <= kRecurrence && conj <= kConjugation,
          os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hilbert-Schmidt closed form", hilbert_schmidt},
      {"Schatten threshold", schatten_threshold},
      {"decay exponent", decay_exponent},
      {"Fourier diagonal", fourier_diagonal},
      {"semigroup law", semigroup},
      {"norm bounds", norm_bounds},
      {"strong continuity", strong_continuity},
      {"interpolation inequality", interpolation},
      {"oracle layer", oracle_layer},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " ["
              << criteria[k].first << "]" << o.detail << " (" << std::fixed
              << std::setprecision(1) << secs << "s)" << std::defaultfloat << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
