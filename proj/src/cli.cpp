#include "rlsg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "rlsg/asymptotics.hpp"
#include "rlsg/discretize.hpp"
#include "rlsg/parallel.hpp"
#include "rlsg/report.hpp"
#include "rlsg/rl_core.hpp"

namespace rlsg::cli {
namespace {

using report::Json;

constexpr std::size_t kMaxGrid = 4096;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double parse_double(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& raw) {
  const double v = parse_double(raw);
  if (v != std::floor(v) || std::isinf(v)) throw ParseError("not an integer: '" + raw + "'");
  return static_cast<long>(v);
}

bool is_one(Complex z) { return z == Complex(1.0, 0.0); }

struct Outcome {
  std::string body;
  bool pass = true;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Format format_or(const RunConfig& c, Format d) { return c.format.value_or(d); }

std::vector<ComplexOrder> orders(const std::vector<Complex>& xs) {
  std::vector<ComplexOrder> out;
  for (const Complex& z : xs) out.emplace_back(z);
  return out;
}

void require_xi(const RunConfig& c) {
  if (c.xi.empty()) throw UsageError(c.subcommand + ": --xi needs at least one order");
}

std::vector<std::size_t> grid_sizes(const RunConfig& c, std::vector<std::size_t> fallback) {
  std::vector<std::size_t> n = c.n.empty() ? std::move(fallback) : c.n;
  for (std::size_t v : n) {
    if (v < 16 || v > kMaxGrid) {
      throw UsageError("grid size must lie in [16, " + std::to_string(kMaxGrid) + "], got " +
                       std::to_string(v));
    }
  }
  return n;
}

void fail(std::ostream& log, const std::string& claim, const std::string& detail) {
  log << "contract failed [" << claim << "]: " << detail << "\n";
}

const char* kClaimSchatten = "Schatten class S^r membership iff Re(xi) > 1/r";
const char* kClaimHs = "Hilbert-Schmidt norm 1/(|Gamma(xi)| sqrt(2 Re(xi) (2 Re(xi) - 1)))";
const char* kClaimDiag = "Fourier diagonal <V e_n, e_n> ~ (2 i pi n)^-xi, equality at xi = 1";
const char* kClaimSemigroup = "semigroup law V_a V_b = V_(a+b)";
const char* kClaimBound = "operator norm bound for V_xi from L^p to L^q";
const char* kClaimInterp = "interpolation bound sup ||T_z||_(S^p) <= S0^(1-theta) S1^theta";

Outcome run_schatten(const RunConfig& c, std::ostream& log) {
  require_xi(c);
  if (c.r.empty()) throw UsageError("schatten: --r needs at least one exponent");
  const auto ns = grid_sizes(c, {1024});
  const auto ords = orders(c.xi);
  struct Job {
    ComplexOrder order;
    std::size_t n;
  };
  std::vector<Job> jobs;
  for (std::size_t n : ns)
    for (const auto& o : ords) jobs.push_back({o, n});
  SchattenOptions opt{.delta = c.delta, .window = c.window};
  const auto per_job = parallel_map<std::vector<SchattenVerdict>>(
      jobs.size(), [&](std::size_t k) {
        const SingularSpectrum s = singular_values(build_matrix(jobs[k].order, GridSpec(jobs[k].n)));
        std::vector<SchattenVerdict> vs;
        for (double r : c.r) vs.push_back(classify_spectrum(s, jobs[k].order, r, opt));
        return vs;
      });
  Outcome o;
  Json arr = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "xi_re,xi_im,r,slope,residual,verdict\n";
  for (const auto& vs : per_job) {
    for (const SchattenVerdict& v : vs) {
      Json j = report::to_json(v);
      const bool ok = v.consistent(c.band);
      j["pass"] = ok;
      if (!ok) {
        j["claim"] = kClaimSchatten;
        o.pass = false;
        std::ostringstream d;
        d << "xi = " << v.order.xi() << ", r = " << v.r << ": verdict " << to_string(v.verdict)
          << " with slope " << v.estimated_exponent;
        fail(log, kClaimSchatten, d.str());
      }
      arr.push_back(j);
      csv << v.order.xi().real() << ',' << v.order.xi().imag() << ',' << v.r << ','
          << v.estimated_exponent << ',' << v.fit_residual << ',' << to_string(v.verdict) << '\n';
    }
  }
  o.body = format_or(c, Format::kJson) == Format::kJson ? dump(arr) : csv.str();
  return o;
}

Outcome run_spectrum(const RunConfig& c, std::ostream&) {
  require_xi(c);
  const std::size_t n = grid_sizes(c, {1024}).front();
  const OperatorMatrix m = build_matrix(ComplexOrder(c.xi.front()), GridSpec(n));
  if (c.dump_path) write_matrix_dump(m, *c.dump_path);
  const SingularSpectrum s = singular_values(m);
  Outcome o;
  if (format_or(c, Format::kCsv) == Format::kCsv) {
    std::ostringstream os;
    report::write_spectrum_csv(os, s);
    o.body = os.str();
  } else {
    o.body = dump(Json{{"xi_re", c.xi.front().real()},
                       {"xi_im", c.xi.front().imag()},
                       {"n", n},
                       {"s_n", s.values}});
  }
  return o;
}

Outcome run_hs(const RunConfig& c, std::ostream& log) {
  require_xi(c);
  auto ns = grid_sizes(c, {256, 512, 1024});
  std::sort(ns.begin(), ns.end());
  const double tol = c.tolerance.value_or(0.02);
  const auto ords = orders(c.xi);
  std::vector<double> exact;
  for (const auto& o : ords) exact.push_back(hs_norm_exact(o));
  const std::size_t jobs = ords.size() * ns.size();
  const auto norms = parallel_map<double>(jobs, [&](std::size_t k) {
    const auto& ord = ords[k / ns.size()];
    return schatten_norm(singular_values(build_matrix(ord, GridSpec(ns[k % ns.size()]))), 2.0);
  });
  Outcome o;
  Json arr = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "xi_re,xi_im,n,s2_norm,exact,rel_gap\n";
  for (std::size_t a = 0; a < ords.size(); ++a) {
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < ns.size(); ++b) {
      const double s2 = norms[a * ns.size() + b];
      const double gap = std::abs(s2 - exact[a]) / exact[a];
      bool ok = gap < prev;
      if (b + 1 == ns.size()) ok = ok && gap <= tol;
      prev = gap;
      Json j{{"xi_re", c.xi[a].real()}, {"xi_im", c.xi[a].imag()}, {"n", ns[b]},
             {"s2_norm", s2},           {"exact", exact[a]},      {"rel_gap", gap},
             {"pass", ok}};
      if (!ok) {
        j["claim"] = kClaimHs;
        o.pass = false;
        std::ostringstream d;
        d << "xi = " << c.xi[a] << ", N = " << ns[b] << ": relative gap " << gap;
        fail(log, kClaimHs, d.str());
      }
      arr.push_back(j);
      csv << c.xi[a].real() << ',' << c.xi[a].imag() << ',' << ns[b] << ',' << s2 << ','
          << exact[a] << ',' << gap << '\n';
    }
  }
  o.body = format_or(c, Format::kJson) == Format::kJson ? dump(arr) : csv.str();
  return o;
}

Outcome run_diag(const RunConfig& c, std::ostream& log) {
  require_xi(c);
  const std::vector<long> modes =
      c.modes.empty() ? std::vector<long>{1, 10, 100, 1000, 10000} : c.modes;
  const double tol = c.tolerance.value_or(0.05);
  const auto ords = orders(c.xi);
  const std::size_t jobs = ords.size() * modes.size();
  const auto rows = parallel_map<DiagonalReport>(jobs, [&](std::size_t k) {
    return diagonal_report(ords[k / modes.size()], FourierMode(modes[k % modes.size()]));
  });
  Outcome o;
  Json arr = Json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Complex xi = c.xi[k / modes.size()];
    const DiagonalReport& r = rows[k];
    const double dev = std::abs(r.ratio - 1.0);
    bool ok = true;
    if (is_one(xi)) ok = dev <= 1e-10;
    else if (r.n >= 10000) ok = dev <= tol;
    if (!ok) {
      o.pass = false;
      std::ostringstream d;
      d << "xi = " << xi << ", n = " << r.n << ": |ratio - 1| = " << dev;
      fail(log, kClaimDiag, d.str());
    }
    arr.push_back(Json{{"xi_re", xi.real()},
                       {"xi_im", xi.imag()},
                       {"n", r.n},
                       {"exact_re", r.exact.real()},
                       {"exact_im", r.exact.imag()},
                       {"asymptote_re", r.asymptote.real()},
                       {"asymptote_im", r.asymptote.imag()},
                       {"ratio_abs", std::abs(r.ratio)},
                       {"pass", ok}});
    if (!ok) arr.back()["claim"] = kClaimDiag;
  }
  if (format_or(c, Format::kCsv) == Format::kCsv) {
    std::ostringstream os;
    report::write_diagonal_csv(os, rows);
    o.body = os.str();
  } else {
    o.body = dump(arr);
  }
  return o;
}

Outcome run_semigroup(const RunConfig& c, std::ostream& log) {
  require_xi(c);
  if (c.xi2.size() != c.xi.size()) {
    throw UsageError("semigroup: --xi and --xi2 must list the same number of orders");
  }
  auto ns = grid_sizes(c, {256, 512, 1024});
  std::sort(ns.begin(), ns.end());
  const double tol = c.tolerance.value_or(2e-2);
  const std::size_t jobs = c.xi.size() * ns.size();
  const auto res = parallel_map<SemigroupResidual>(jobs, [&](std::size_t k) {
    const std::size_t a = k / ns.size();
    return semigroup_residual(ComplexOrder(c.xi[a]), ComplexOrder(c.xi2[a]), ns[k % ns.size()]);
  });
  Outcome o;
  Json arr = Json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "xi1_re,xi1_im,xi2_re,xi2_im,n,matrix_residual,nodal_residual,coefficient_residual\n";
  for (std::size_t a = 0; a < c.xi.size(); ++a) {
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < ns.size(); ++b) {
      const SemigroupResidual& r = res[a * ns.size() + b];
      bool ok = r.matrix < prev && r.coefficient <= 1e-12;
      if (ns[b] >= 1024) ok = ok && r.matrix <= tol;
      prev = r.matrix;
      Json j{{"xi1_re", c.xi[a].real()},  {"xi1_im", c.xi[a].imag()},
             {"xi2_re", c.xi2[a].real()}, {"xi2_im", c.xi2[a].imag()},
             {"n", ns[b]},                {"matrix_residual", r.matrix},
             {"nodal_residual", r.nodal}, {"coefficient_residual", r.coefficient},
             {"pass", ok}};
      if (!ok) {
        j["claim"] = kClaimSemigroup;
        o.pass = false;
        std::ostringstream d;
        d << "(" << c.xi[a] << ", " << c.xi2[a] << "), N = " << ns[b]
          << ": matrix residual " << r.matrix << ", coefficient residual " << r.coefficient;
        fail(log, kClaimSemigroup, d.str());
      }
      arr.push_back(j);
      csv << c.xi[a].real() << ',' << c.xi[a].imag() << ',' << c.xi2[a].real() << ','
          << c.xi2[a].imag() << ',' << ns[b] << ',' << r.matrix << ',' << r.nodal << ','
          << r.coefficient << '\n';
    }
  }
  o.body = format_or(c, Format::kJson) == Format::kJson ? dump(arr) : csv.str();
  return o;
}

Outcome run_bounds(const RunConfig& c, std::ostream& log) {
  const auto ords = c.xi.empty() ? default_bound_orders() : orders(c.xi);
  const auto pairs = c.pq.empty() ? default_exponent_pairs() : c.pq;
  const double tol = c.tolerance.value_or(0.02);
  NormProbeOptions opt{.grid_size = grid_sizes(c, {1024}).front(), .trials = c.trials,
                       .seed = c.seed};
  const std::size_t jobs = ords.size() * pairs.size();
  const auto reps = parallel_map<BoundReport>(jobs, [&](std::size_t k) {
    const ExponentPair pq = pairs[k % pairs.size()];
    return bound_report(ords[k / pairs.size()], pq.p, pq.q, tol, opt);
  });
  Outcome o;
  Json arr = Json::array();
  for (const BoundReport& b : reps) {
    Json j = report::to_json(b);
    if (!b.pass) {
      j["claim"] = kClaimBound;
      o.pass = false;
      std::ostringstream d;
      d << "xi = " << b.order.xi() << ", p = " << b.p << ", q = " << b.q << ": numeric "
        << b.numeric_lower << " exceeds bound " << b.theoretical;
      fail(log, kClaimBound, d.str());
    }
    arr.push_back(j);
  }
  if (c.trend) {
    for (const ExponentPair& pq : pairs) {
      for (double t : {2.0, 4.0, 8.0}) {
        log << "trend p=" << pq.p << " q=" << pq.q << " t=" << t
            << " Gamma(t+1)*norm=" << gamma_scaled_norm(t, pq.p, pq.q, opt) << "\n";
      }
    }
  }
  o.body = dump(arr);
  return o;
}

Outcome run_cyclic(const RunConfig& c, std::ostream&) {
  if (c.function.empty()) throw UsageError("cyclic: --function is required");
  const std::size_t n = grid_sizes(c, {1024}).front();
  const SampledFunction f = load_function(c.function, GridSpec(n));
  const CyclicityReport r = cyclicity_index(f, c.p);
  Outcome o;
  if (format_or(c, Format::kJson) == Format::kJson) {
    o.body = dump(Json::array({Json{{"function", c.function},
                                    {"n", n},
                                    {"ell", r.ell},
                                    {"p_exponent", r.p_exponent},
                                    {"cyclic", r.cyclic}}}));
  } else {
    std::ostringstream os;
    os.precision(17);
    os << "function,n,ell,p_exponent,cyclic\n"
       << c.function << ',' << n << ',' << r.ell << ',' << r.p_exponent << ','
       << (r.cyclic ? "true" : "false") << '\n';
    o.body = os.str();
  }
  return o;
}

Outcome run_interp(const RunConfig& c, std::ostream& log) {
  const InterpolationSpec spec(c.alpha0, c.alpha1, c.p0, c.p1, c.theta);
  const std::vector<double> sigma = c.sigma.empty() ? std::vector<double>{0.0, 0.5, 1.0} : c.sigma;
  const std::size_t n = grid_sizes(c, {512}).front();
  const InterpolationReport rep =
      interpolation_check(spec, sigma, n, c.tolerance.value_or(0.05));
  Outcome o;
  Json j = report::to_json(rep, spec);
  j["pass"] = !rep.any_violation;
  if (rep.any_violation) {
    o.pass = false;
    j["claim"] = kClaimInterp;
    fail(log, kClaimInterp, "bound " + std::to_string(rep.bound) + " exceeded");
  }
  o.body = dump(Json::array({j}));
  return o;
}

struct RawArgs {
  std::string xi, xi2, r, pq, n, modes, sigma, window, format, seed;
  std::string p0 = "inf", p1 = "1";
};

void add_common(CLI::App* sub, RunConfig& c, RawArgs& raw) {
  sub->add_option("-o,--out", c.output, "Report file (default: stdout)");
  sub->add_option("--format", raw.format, "json or csv");
  sub->add_option("--seed", raw.seed, "PRNG seed for random trial functions");
}

RunConfig finish(RunConfig c, const RawArgs& raw, const std::string& sub) {
  c.subcommand = sub;
  try {
    if (!raw.xi.empty() || sub == "schatten" || sub == "hs" || sub == "diag" ||
        sub == "semigroup" || sub == "spectrum") {
      c.xi = parse_complex_list(raw.xi);
    }
    c.xi2 = parse_complex_list(raw.xi2);
    for (double v : parse_double_list(raw.r)) c.r.push_back(v);
    for (const std::string& pair : split(raw.pq, ',')) {
      const auto parts = split(pair, ':');
      if (parts.size() != 2) throw ParseError("--pq entries look like p:q, got '" + pair + "'");
      c.pq.push_back({parse_double(parts[0]), parse_double(parts[1])});
    }
    for (const std::string& s : split(raw.n, ',')) {
      const long v = parse_long(s);
      if (v <= 0) throw ParseError("grid size must be positive");
      c.n.push_back(static_cast<std::size_t>(v));
    }
    for (const std::string& s : split(raw.modes, ',')) c.modes.push_back(parse_long(s));
    c.sigma = parse_double_list(raw.sigma);
    if (!raw.window.empty()) {
      const auto w = split(raw.window, ',');
      if (w.size() != 2) throw ParseError("--window expects n_min,n_max");
      c.window = FitWindow{static_cast<std::size_t>(parse_long(w[0])),
                           static_cast<std::size_t>(parse_long(w[1]))};
    }
    if (!raw.format.empty()) {
      if (raw.format == "json") c.format = Format::kJson;
      else if (raw.format == "csv") c.format = Format::kCsv;
      else throw ParseError("--format must be json or csv");
    }
    if (!raw.seed.empty()) c.seed = std::stoull(raw.seed, nullptr, 0);
    c.p0 = parse_double(raw.p0);
    c.p1 = parse_double(raw.p1);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const std::logic_error& e) {
    throw UsageError(std::string("bad argument: ") + e.what());
  }
  return c;
}

struct Parsed {
  RunConfig config;
  bool help = false;
  std::string help_text;
};

Parsed parse_impl(int argc, const char* const* argv) {
  CLI::App app{"Numerical checks for the complex-order Riemann-Liouville semigroup", "rlsg"};
  app.require_subcommand(1);
  RunConfig c;
  RawArgs raw;

  auto* schatten = app.add_subcommand("schatten", "Schatten-class verdicts from singular-value decay");
  schatten->add_option("--xi", raw.xi, "Orders, e.g. 0.75,1.5,0.55+0.3i");
  schatten->add_option("--r", raw.r, "Schatten exponents");
  schatten->add_option("--n", raw.n, "Grid size(s)");
  schatten->add_option("--window", raw.window, "Fit window n_min,n_max");
  schatten->add_option("--delta", c.delta, "Boundary band on slope*r");
  schatten->add_option("--band", c.band, "Accepted band |tau r - 1| < band r");

  auto* spectrum = app.add_subcommand("spectrum", "Singular values of the discretized operator");
  spectrum->add_option("--xi", raw.xi, "Order");
  spectrum->add_option("--n", raw.n, "Grid size");
  spectrum->add_option("--dump", c.dump_path, "Also write the binary matrix dump");

  auto* hs = app.add_subcommand("hs", "Hilbert-Schmidt norm convergence table");
  hs->add_option("--xi", raw.xi, "Orders with Re(xi) > 1/2");
  hs->add_option("--n", raw.n, "Grid sizes");
  hs->add_option("--tol", c.tolerance, "Relative gap allowed at the largest N");

  auto* diag = app.add_subcommand("diag", "Fourier diagonal against its asymptote");
  diag->add_option("--xi", raw.xi, "Orders with 0 < Re(xi) <= 1");
  diag->add_option("--modes", raw.modes, "Fourier indices n");
  diag->add_option("--tol", c.tolerance, "Allowed |ratio - 1| at n >= 10^4");

  auto* semi = app.add_subcommand("semigroup", "Semigroup-law residuals");
  semi->add_option("--xi", raw.xi, "First factors");
  semi->add_option("--xi2", raw.xi2, "Second factors");
  semi->add_option("--n", raw.n, "Grid sizes");
  semi->add_option("--tol", c.tolerance, "Residual allowed at N >= 1024");

  auto* bounds = app.add_subcommand("bounds", "Operator-norm bounds against numeric lower estimates");
  bounds->add_option("--xi", raw.xi, "Orders (default 0.3,0.6+0.4i,1,2)");
  bounds->add_option("--pq", raw.pq, "Exponent pairs p:q (default 1:1,1:2,2:2,2:inf)");
  bounds->add_option("--n", raw.n, "Grid size");
  bounds->add_option("--trials", c.trials, "Random trial functions");
  bounds->add_option("--tol", c.tolerance, "Relative slack on the bound");
  bounds->add_flag("--trend", c.trend, "Log Gamma(t+1)*norm for t = 2,4,8");

  auto* cyclic = app.add_subcommand("cyclic", "Cyclicity index of a function");
  cyclic->add_option("--function", c.function, "const:c, monomial:n, indicator:a,b or CSV file");
  cyclic->add_option("--n", raw.n, "Grid size");
  cyclic->add_option("--p", c.p, "Lebesgue exponent");

  auto* interp = app.add_subcommand("interp", "Interpolation inequality on a strip");
  interp->add_option("--alpha0", c.alpha0);
  interp->add_option("--alpha1", c.alpha1);
  interp->add_option("--p0", raw.p0);
  interp->add_option("--p1", raw.p1);
  interp->add_option("--theta", c.theta);
  interp->add_option("--sigma", raw.sigma, "Imaginary offsets to test");
  interp->add_option("--n", raw.n, "Grid size");
  interp->add_option("--tol", c.tolerance, "Allowed excess over the bound");

  for (auto* sub : {schatten, spectrum, hs, diag, semi, bounds, cyclic, interp}) {
    add_common(sub, c, raw);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return {c, true, app.help()};
  } catch (const CLI::Error& e) {
    throw UsageError(e.what());
  }
  const std::string name = app.get_subcommands().front()->get_name();
  return {finish(std::move(c), raw, name), false, {}};
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return parse_double(s);
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (cut == std::string::npos) return {0.0, imag_part(s)};
  return {parse_double(s.substr(0, cut)), imag_part(s.substr(cut))};
}

std::vector<Complex> parse_complex_list(const std::string& s) {
  std::vector<Complex> out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_complex(item));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_double(item));
  return out;
}

RunConfig parse_args(int argc, const char* const* argv) {
  Parsed p = parse_impl(argc, argv);
  if (p.help) throw UsageError(p.help_text);
  return std::move(p.config);
}

SampledFunction load_function(const std::string& spec, const GridSpec& grid) {
  const auto colon = spec.find(':');
  const std::string kind = colon == std::string::npos ? "" : spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "const") {
    const Complex c = parse_complex(arg);
    return SampledFunction(grid, std::vector<Complex>(grid.size(), c));
  }
  if (kind == "monomial") {
    const long d = parse_long(arg);
    if (d < 0) throw ParseError("monomial degree must be >= 0");
    return SampledFunction::sample(grid, [d](double x) {
      return Complex(std::pow(x, static_cast<double>(d)));
    });
  }
  if (kind == "indicator") {
    const auto ab = parse_double_list(arg);
    if (ab.size() != 2 || !(ab[0] <= ab[1])) throw ParseError("indicator expects a,b with a <= b");
    const double a = ab[0], b = ab[1];
    return SampledFunction::sample(grid, [a, b](double x) {
      return Complex(x >= a && x <= b ? 1.0 : 0.0);
    });
  }

  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open function file '" + spec + "'");
  std::vector<Complex> v(grid.size());
  std::string line;
  long line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split(line, ',');
    if (!header) {
      if (cols.size() != 3 || cols[0] != "x" || cols[1] != "re" || cols[2] != "im") {
        throw ParseError(spec + ":" + std::to_string(line_no) + ": expected header x,re,im");
      }
      header = true;
      continue;
    }
    if (cols.size() != 3) {
      throw ParseError(spec + ":" + std::to_string(line_no) + ": expected 3 columns");
    }
    double x, re, im;
    try {
      x = parse_double(cols[0]);
      re = parse_double(cols[1]);
      im = parse_double(cols[2]);
    } catch (const ParseError& e) {
      throw ParseError(spec + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ParseError(spec + ":" + std::to_string(line_no) + ": x outside [0,1]");
    }
    const auto cell = std::min(grid.size() - 1, static_cast<std::size_t>(x * grid.size()));
    v[cell] = Complex(re, im);
  }
  if (!header) throw ParseError(spec + ": empty function file");
  return SampledFunction(grid, std::move(v));
}

int run(const RunConfig& c, std::ostream& out, std::ostream& log) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&, std::ostream&)>>
      handlers = {{"schatten", run_schatten}, {"spectrum", run_spectrum}, {"hs", run_hs},
                  {"diag", run_diag},         {"semigroup", run_semigroup},
                  {"bounds", run_bounds},     {"cyclic", run_cyclic},   {"interp", run_interp}};
  const auto it = handlers.find(c.subcommand);
  if (it == handlers.end()) {
    log << "usage error: unknown subcommand '" << c.subcommand << "'\n";
    return kUsage;
  }
  Outcome o;
  try {
    o = it->second(c, log);
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    log << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    log << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  if (c.output.empty()) {
    out << o.body;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      log << "cannot write " << c.output << "\n";
      return kDomain;
    }
    f << o.body;
  }
  return o.pass ? kOk : kContractFailed;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
  Parsed p;
  try {
    p = parse_impl(argc, argv);
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    log << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  if (p.help) {
    out << p.help_text;
    return kOk;
  }
  try {
    return run(p.config, out, log);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace rlsg::cli
