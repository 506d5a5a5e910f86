#include "rlsg/report.hpp"

#include <cmath>
#include <iomanip>

namespace rlsg::report {
namespace {

struct Precise {
  explicit Precise(std::ostream& os) : os_(os), old_(os.precision(17)) {}
  ~Precise() { os_.precision(old_); }
  std::ostream& os_;
  std::streamsize old_;
};

}  // namespace

void write_spectrum_csv(std::ostream& os, const SingularSpectrum& s) {
  Precise guard(os);
  os << "n,s_n\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) os << k + 1 << ',' << s.values[k] << '\n';
}

void write_diagonal_csv(std::ostream& os, std::span<const DiagonalReport> rows) {
  Precise guard(os);
  os << "n,exact_re,exact_im,asymptote_re,asymptote_im,ratio_abs\n";
  for (const DiagonalReport& r : rows) {
    os << r.n << ',' << r.exact.real() << ',' << r.exact.imag() << ',' << r.asymptote.real() << ','
       << r.asymptote.imag() << ',' << std::abs(r.ratio) << '\n';
  }
}

Json exponent(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

Json to_json(const SchattenVerdict& v) {
  return Json{{"xi_re", v.order.xi().real()},
              {"xi_im", v.order.xi().imag()},
              {"r", v.r},
              {"slope", v.estimated_exponent},
              {"residual", v.fit_residual},
              {"verdict", to_string(v.verdict)},
              {"n", v.matrix_size},
              {"fit_window", {v.fit_window.n_min, v.fit_window.n_max}},
              {"threshold", v.threshold},
              {"tau", v.order.tau()},
              {"exact_member", v.exact_member},
              {"constant", v.constant}};
}

Json to_json(const BoundReport& b) {
  return Json{{"xi_re", b.order.xi().real()},
              {"xi_im", b.order.xi().imag()},
              {"p", exponent(b.p)},
              {"q", exponent(b.q)},
              {"in_domain", b.in_domain},
              {"theoretical", b.in_domain ? Json(b.theoretical) : Json(nullptr)},
              {"numeric_lower", b.in_domain ? Json(b.numeric_lower) : Json(nullptr)},
              {"pass", b.pass}};
}

Json to_json(const InterpolationReport& r, const InterpolationSpec& spec) {
  Json rows = Json::array();
  for (const InterpolationRow& row : r.rows) {
    rows.push_back({{"sigma", row.sigma}, {"norm", row.norm}, {"violation", row.violation}});
  }
  return Json{{"alpha0", spec.alpha0()},
              {"alpha1", spec.alpha1()},
              {"p0", exponent(spec.p0())},
              {"p1", exponent(spec.p1())},
              {"theta", spec.theta()},
              {"alpha", spec.alpha()},
              {"p", exponent(spec.p())},
              {"n", r.matrix_size},
              {"s0", r.s0},
              {"s1", r.s1},
              {"bound", r.bound},
              {"tolerance", r.tolerance},
              {"rows", rows},
              {"violation", r.any_violation}};
}

}  // namespace rlsg::report
