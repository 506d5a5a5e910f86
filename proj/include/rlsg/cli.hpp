#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlsg/laws.hpp"
#include "rlsg/spectral.hpp"
#include "rlsg/types.hpp"

namespace rlsg::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv };

enum ExitCode : int { kOk = 0, kContractFailed = 1, kUsage = 2, kDomain = 3 };

struct RunConfig {
  std::string subcommand;
  std::vector<Complex> xi;
  std::vector<Complex> xi2;  // second factor for `semigroup`
  std::vector<double> r;
  std::vector<ExponentPair> pq;
  std::vector<std::size_t> n;
  std::vector<long> modes;
  std::vector<double> sigma;
  std::optional<FitWindow> window;
  double delta = 0.05;
  double band = 0.2;
  std::optional<double> tolerance;
  std::string function;
  double p = 1.0;
  int trials = 16;
  double alpha0 = 0.25, alpha1 = 1.25, p0 = std::numeric_limits<double>::infinity(), p1 = 1.0, theta = 0.5;
  std::string output;  // empty: stdout
  std::optional<std::string> dump_path;
  std::optional<Format> format;
  std::uint64_t seed = kDefaultSeed;
  bool trend = false;
};

/// Parses "1.5", "0.8+0.6i", "0.6-0.3i", "2i".
Complex parse_complex(const std::string& s);

/// Comma-separated lists.
std::vector<Complex> parse_complex_list(const std::string& s);
std::vector<double> parse_double_list(const std::string& s);  // accepts "inf"

/// Builds a RunConfig from argv. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs a subcommand, writing its report to `out` (or the configured file)
/// and diagnostics to `log`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// "const:c", "monomial:n", "indicator:a,b", or a CSV file with header
/// "x,re,im". File samples are assigned to the cell containing x; cells
/// with several samples keep the last one, empty cells stay zero.
SampledFunction load_function(const std::string& spec_or_path, const GridSpec& grid);

/// Full command-line entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace rlsg::cli
