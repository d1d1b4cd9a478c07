#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "floerkit/cli.hpp"
#include "json.hpp"

using namespace floerkit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "floerkit");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("mumford") {
  auto r = call({"mumford", "--g", "2", "--n", "3"});
  REQUIRE(r.code == kExitOk);
  auto j = parse(r);
  CHECK(j["pretty"] == "α³ − 2αβ − γ");
  CHECK(j["degree"] == 6);
  CHECK(j["m"] == 1);
  CHECK(call({"mumford", "--g", "0", "--n", "1"}).code == kExitPrecondition);
  CHECK(call({"mumford", "--g", "1", "--n", "4"}).code == kExitPrecondition);
  auto e = call({"mumford", "--g", "2", "--n", "3", "--expand-gamma"});
  CHECK(e.code == kExitOk);
  CHECK(parse(e)["polynomial"].get<std::string>().find("psi") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"nonsense"}).code == kExitUsage);
  CHECK(call({"mumford", "--g"}).code == kExitUsage);
  CHECK(call({"mumford", "--g", "1", "--n", "3", "--format", "xml"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("spectrum and tables") {
  auto r = call({"spectrum", "--space", "V", "--g", "0", "--n", "1"});
  CHECK(r.code == kExitPrecondition);
  CHECK(r.err.find("V_{0,1}") != std::string::npos);
  auto u = call({"spectrum", "--space", "U", "--g", "1", "--n", "2"});
  REQUIRE(u.code == kExitOk);
  auto t = call({"spectrum", "--space", "U", "--g", "1", "--n", "2", "--format", "tsv"});
  REQUIRE(t.code == kExitOk);
  CHECK(t.out.find('\t') != std::string::npos);
  CHECK(call({"ahi", "--n", "4"}).code == kExitOk);
  auto th = parse(call({"thurston", "--surface", "1,2", "--surface", "0,3"}));
  CHECK(th["bound"] == 3);
  CHECK(call({"lefschetz", "--g", "3"}).code == kExitOk);
  CHECK(call({"xi", "--k", "3", "--n", "5"}).code == kExitOk);
}

TEST_CASE("repvariety") {
  auto a = call({"repvariety", "--g", "0", "--n", "3", "--eps", "-1", "--seed", "7"});
  REQUIRE(a.code == kExitOk);
  auto j = parse(a);
  CHECK(j["quotient_dim"] == 0);
  CHECK(j["expected_dim"] == 0);
  CHECK(j["residual"].get<double>() < 1e-10);
  auto b = call({"repvariety", "--g", "0", "--n", "3", "--eps", "-1", "--seed", "7"});
  CHECK(a.out == b.out);
  CHECK(call({"repvariety", "--g", "0", "--n", "3", "--eps", "2"}).code == kExitPrecondition);
}

TEST_CASE("grr-check") {
  auto r = call({"grr-check", "--g", "1", "--m", "1", "--T", "12"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse(r)["max_residual"].get<double>() < 1e-9);
  // short truncations pass only within the reported tail estimate
  auto s = call({"grr-check", "--g", "1", "--m", "1", "--T", "8", "--tol", "1e-30"});
  REQUIRE(s.code == kExitOk);
  auto j = parse(s);
  CHECK(j["max_residual"].get<double>() <= 1e-30 + j["tail_estimate"].get<double>());
  CHECK(call({"grr-check", "--g", "1", "--m", "1", "--T", "2"}).code == kExitPrecondition);
}

TEST_CASE("quotient") {
  auto r = call({"quotient", "--model", "q", "--g", "1", "--n", "3", "--both-signs"});
  REQUIRE(r.code == kExitOk);
  auto j = parse(r);
  CHECK(j["dimension"] == 2);
  CHECK(j.contains("negated"));

  const std::string path = "floerkit_test_ideal.txt";
  {
    std::ofstream f(path);
    f << "alpha^2 - 4\nbeta - 2\ngamma\n";
  }
  auto f = call({"quotient", "--ideal", path, "--n", "0"});
  REQUIRE(f.code == kExitOk);
  CHECK(parse(f)["dimension"] == 2);
  CHECK(call({"quotient", "--ideal", "missing_file.txt"}).code == kExitPrecondition);
  CHECK(call({"quotient", "--model", "zzz"}).code == kExitPrecondition);
}
