#include "lackwalk/cli.hpp"
#include "lackwalk/csv.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace lackwalk;

namespace {

struct Result
{
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(char const *name)
{
  return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("format_double round-trips")
{
  for (double x : {0.1, 1.0 / 3, 0.996904, 1e-300, 12345678.9}) {
    CHECK(std::stod(csv::format_double(x)) == x);
  }
  CHECK(csv::format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("trace csv round-trips")
{
  EvolutionTrace t;
  t.probs = {0.0005, 1.0 / 7, 0.99};
  std::stringstream ss;
  csv::write_trace(ss, t);
  CHECK(ss.str().rfind("t,p\n", 0) == 0);
  CHECK(csv::read_trace(ss).probs == t.probs);
}

TEST_CASE("key-value csv round-trips")
{
  csv::KeyValues kv{{"theta", "0.1"}, {"case", "one_set"}};
  std::stringstream ss;
  csv::write_key_values(ss, kv);
  CHECK(csv::read_key_values(ss) == kv);
}

TEST_CASE("simulate writes one row per step")
{
  auto const r = call({"simulate", "--n1", "20", "--n2", "12", "--k1", "2", "--l1", "0.6", "--steps", "7"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  CHECK(csv::read_trace(in).size() == 8);
}

TEST_CASE("simulate with zero steps writes header and p(0)")
{
  auto const path = temp_path("lackwalk_zero.csv");
  auto const r = call({"simulate", "--n1", "5", "--n2", "5", "--k1", "1", "--steps", "0", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string a, b, c;
  std::getline(in, a);
  std::getline(in, b);
  CHECK(a == "t,p");
  CHECK(b.rfind("0,", 0) == 0);
  CHECK_FALSE(std::getline(in, c));
  std::remove(path.c_str());
}

TEST_CASE("engines give the same csv values")
{
  std::vector<std::string> base{"simulate", "--n1", "7", "--n2", "5", "--k1", "1", "--k2", "1", "--l1", "1.5",
                                "--steps", "20"};
  auto full = base, sub = base;
  full.insert(full.end(), {"--engine", "full"});
  sub.insert(sub.end(), {"--engine", "subspace"});
  std::istringstream a(call(full).out), b(call(sub).out);
  auto const ta = csv::read_trace(a), tb = csv::read_trace(b);
  REQUIRE(ta.size() == tb.size());
  for (std::size_t t = 0; t < ta.size(); ++t) { CHECK(ta[t] == doctest::Approx(tb[t]).epsilon(1e-12)); }
}

TEST_CASE("config file with command-line override")
{
  auto const path = temp_path("lackwalk_cfg.ini");
  {
    std::ofstream f(path);
    f << "n1=20\nn2=30\nk1=2\nl1=0.5\ninit=uniform\nsteps=3\n";
  }
  auto const r = call({"simulate", "--config", path, "--steps", "5"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  auto const t = csv::read_trace(in);
  CHECK(t.size() == 6);
  CHECK(t[0] == doctest::Approx(2.0 / 50));
  std::remove(path.c_str());
}

TEST_CASE("analytic output")
{
  auto const r = call({"analytic", "--n1", "1000", "--n2", "800", "--k1", "3", "--l1", "1.2", "--init", "uniform"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  auto const kv = csv::read_key_values(in);
  auto get = [&](std::string const &k) {
    for (auto const &[key, v] : kv) {
      if (key == k) { return std::stod(v); }
    }
    FAIL("missing key " << k);
    return 0.0;
  };
  CHECK(std::abs(get("p_star") - 0.996904) < 1e-4);
  CHECK(get("optimal_l1") == doctest::Approx(1.2));
  CHECK(get("threshold_n2") == doctest::Approx(171.5729).epsilon(1e-6));
  CHECK(get("loopless_p_star") == doctest::Approx(1000.0 / 1800));
}

TEST_CASE("exit codes")
{
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == cli::kExitUsage);
  CHECK(call({"simulate", "--n1", "abc"}).code == cli::kExitUsage);
  CHECK(call({"simulate", "--init", "sideways", "--n1", "3", "--n2", "3"}).code == cli::kExitUsage);
  CHECK(call({"heatmap", "--n1", "10", "--n2", "10", "--k1", "1", "--l1-range", "0:1:0", "--l2-range", "0:1:2"}).code
        == cli::kExitUsage);
  CHECK(call({"heatmap", "--n1", "10", "--n2", "10", "--k1", "1", "--l1-range", "1:0:3", "--l2-range", "0:1:2"}).code
        == cli::kExitUsage);
  CHECK(call({"simulate", "--n1", "0", "--n2", "3"}).code == cli::kExitFailure);
  CHECK(call({"simulate", "--n1", "3", "--n2", "3", "--k1", "9"}).code == cli::kExitFailure);
  CHECK(call({"analytic", "--n1", "40", "--n2", "50", "--k1", "1", "--k2", "2", "--l1", "1"}).code
        == cli::kExitFailure);
  CHECK(call({"simulate", "--n1", "3", "--n2", "3", "--k1", "1", "--out", "/nonexistent/dir/x.csv"}).code
        == cli::kExitFailure);
  CHECK(call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("full engine is capped")
{
  std::vector<std::string> args{"simulate", "--n1", "3000", "--n2", "3000", "--k1", "3000", "--steps", "1"};
  auto const r = call(args);
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("--force") != std::string::npos);
  std::vector<std::string> capped{"simulate", "--n1", "30", "--n2", "30", "--k1", "30", "--steps", "1", "--max-arcs", "100"};
  CHECK(call(capped).code == cli::kExitFailure);
  capped.push_back("--force");
  CHECK(call(capped).code == cli::kExitOk);
}

TEST_CASE("heatmap output shape")
{
  auto const r = call({"heatmap", "--n1", "50", "--n2", "80", "--k1", "2", "--k2", "1", "--l1-range", "0:4:3",
                       "--l2-range", "0:2:2", "--threads", "2", "--metric", "pstar"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "l1,l2,t_star,p_star,T,loopless_T");
  int rows = 0;
  while (std::getline(in, line)) { ++rows; }
  CHECK(rows == 6);
}

TEST_CASE("verify subcommand")
{
  auto const r = call({"verify", "--max-set-size", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
