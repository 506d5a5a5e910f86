#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rlsg/cli.hpp"

using namespace rlsg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rlsg");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& body) {
  const auto p = fs::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("complex and list parsing") {
  CHECK(cli::parse_complex("1.5") == Complex(1.5, 0));
  CHECK(cli::parse_complex("0.55+0.3i") == Complex(0.55, 0.3));
  CHECK(cli::parse_complex("0.6-0.2i") == Complex(0.6, -0.2));
  CHECK(cli::parse_complex("-i") == Complex(0, -1));
  CHECK(cli::parse_complex("2i") == Complex(0, 2));
  CHECK(cli::parse_complex("1e-1+2e+0i") == Complex(0.1, 2.0));
  CHECK(cli::parse_complex(" 3 + 4i ") == Complex(3, 4));
  CHECK_THROWS_AS(cli::parse_complex("abc"), cli::ParseError);
  CHECK_THROWS_AS(cli::parse_complex(""), cli::ParseError);
  CHECK(cli::parse_complex_list("0.75,1,0.8+0.6i").size() == 3);
  const auto d = cli::parse_double_list("1,2,inf");
  REQUIRE(d.size() == 3);
  CHECK(std::isinf(d[2]));
}

TEST_CASE("parse_args fills the config") {
  const char* argv[] = {"rlsg", "schatten", "--xi", "0.75,1.5", "--r", "1,2", "--n", "512",
                        "--window", "8,40", "--format", "csv"};
  const auto c = cli::parse_args(12, argv);
  CHECK(c.subcommand == "schatten");
  CHECK(c.xi.size() == 2);
  CHECK(c.r.size() == 2);
  REQUIRE(c.n.size() == 1);
  CHECK(c.n[0] == 512);
  REQUIRE(c.window.has_value());
  CHECK(c.window->n_max == 40);
  CHECK(c.format == cli::Format::kCsv);
  CHECK(c.seed == kDefaultSeed);

  const char* bad[] = {"rlsg", "schatten", "--bogus"};
  CHECK_THROWS_AS(cli::parse_args(3, bad), cli::UsageError);
  const char* fmt[] = {"rlsg", "hs", "--format", "xml"};
  CHECK_THROWS_AS(cli::parse_args(4, fmt), cli::UsageError);
}

TEST_CASE("schatten member verdict") {
  const auto r = run_cli({"schatten", "--xi", "1.5", "--r", "1", "--n", "1024"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["verdict"] == "member");
  CHECK(j[0]["xi_re"] == 1.5);
  CHECK(j[0]["r"] == 1.0);
  CHECK(j[0].contains("slope"));
  CHECK(j[0].contains("residual"));
}

TEST_CASE("hs table converges to 1/sqrt(2)") {
  const auto r = run_cli({"hs", "--xi", "1", "--n", "256,512,1024"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[2]["exact"].get<double>() == doctest::Approx(0.70710678118654752));
  CHECK(j[2]["rel_gap"].get<double>() < j[0]["rel_gap"].get<double>());
  CHECK(j[2]["rel_gap"].get<double>() < 0.02);
}

TEST_CASE("usage and domain errors") {
  auto r = run_cli({"schatten", "--r", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--xi") != std::string::npos);
  r = run_cli({"hs", "--xi", ""});
  CHECK(r.code == 2);
  r = run_cli({});
  CHECK(r.code == 2);
  r = run_cli({"schatten", "--xi", "1", "--r", "1", "--n", "8192"});
  CHECK(r.code == 2);
  r = run_cli({"hs", "--xi", "0.4"});
  CHECK(r.code == 3);
  CHECK(r.err.find("1/2") != std::string::npos);
  r = run_cli({"schatten", "--xi", "-0.5", "--r", "1"});
  CHECK(r.code == 3);
  r = run_cli({"semigroup", "--xi", "0.5", "--xi2", "0.5,0.2"});
  CHECK(r.code == 2);
  r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("schatten") != std::string::npos);
}

TEST_CASE("failing contracts exit 1 and name the claim") {
  // A tolerance no discretization can meet.
  const auto r = run_cli({"hs", "--xi", "0.75", "--n", "64,128", "--tol", "1e-9"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Hilbert-Schmidt") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[1]["pass"] == false);
  CHECK(j[1]["claim"].get<std::string>().find("Hilbert-Schmidt") != std::string::npos);
}

TEST_CASE("diag csv") {
  const auto r = run_cli({"diag", "--xi", "1", "--modes", "1,10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,exact_re,exact_im,asymptote_re,asymptote_im,ratio_abs\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}

TEST_CASE("semigroup and bounds subcommands") {
  auto r = run_cli({"semigroup", "--xi", "0.5", "--xi2", "0.5", "--n", "128,256"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 2);
  r = run_cli({"bounds", "--xi", "1", "--pq", "1:1,2:inf", "--n", "256", "--trials", "4"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[1]["q"] == "inf");
  r = run_cli({"bounds", "--pq", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"bounds", "--xi", "0.6+0.4i", "--pq", "1:2",
                                         "--n",    "256",  "--seed",   "12345"};
  const auto a = run_cli(args), b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cyclic on built-in functions and files") {
  auto r = run_cli({"cyclic", "--function", "indicator:0.5,1", "--n", "256"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["ell"].get<double>() == doctest::Approx(0.5));
  CHECK(j[0]["cyclic"] == false);

  const auto path = temp_file("rlsg_cli_fn.csv", "x,re,im\n0.9,1.0,0.0\n0.95,0,2\n");
  r = run_cli({"cyclic", "--function", path.string(), "--n", "100"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j[0]["ell"].get<double>() == doctest::Approx(0.9));
  fs::remove(path);

  r = run_cli({"cyclic", "--function", "/nonexistent/file.csv"});
  CHECK(r.code == 2);
}

TEST_CASE("load_function") {
  const GridSpec g(1024);
  auto f = cli::load_function("const:1", g);
  for (auto v : f.values) CHECK(v == Complex(1.0));
  f = cli::load_function("monomial:2", g);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(f.values[i] == Complex(g.node(i) * g.node(i)));
  f = cli::load_function("indicator:0.5,1", g);
  CHECK(f.values[511] == Complex(0.0));
  CHECK(f.values[512] == Complex(1.0));

  const auto bad = temp_file("rlsg_cli_bad.csv", "x,re,im\n0.1,1,0\n0.2,oops,0\n");
  try {
    cli::load_function(bad.string(), g);
    FAIL("expected a parse error");
  } catch (const cli::ParseError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  fs::remove(bad);
  const auto hdr = temp_file("rlsg_cli_hdr.csv", "a,b\n");
  CHECK_THROWS_AS(cli::load_function(hdr.string(), g), cli::ParseError);
  fs::remove(hdr);
  CHECK_THROWS_AS(cli::load_function("monomial:-1", g), cli::ParseError);
}

TEST_CASE("spectrum csv and matrix dump") {
  const auto dump = fs::temp_directory_path() / "rlsg_cli_dump.bin";
  const auto r = run_cli({"spectrum", "--xi", "1", "--n", "32", "--dump", dump.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,s_n\n1,", 0) == 0);
  CHECK(fs::file_size(dump) == 32 + 32 * 32 * 16);
  fs::remove(dump);
}

TEST_CASE("report written to --out") {
  const auto out = fs::temp_directory_path() / "rlsg_cli_out.json";
  const auto r = run_cli({"interp", "--n", "64", "--sigma", "0", "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j[0]["p"].get<double>() == doctest::Approx(2.0));
  fs::remove(out);
}
