#include "lexdist/cli.hpp"
#include "lexdist/json_io.hpp"
#include "lexdist/shakin.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lexdist;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run runCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string writeTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("lexdist_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

} // namespace

TEST_CASE("hilbert") {
  auto r = runCli({"hilbert", "--ideal", R"({"v":1,"n":2,"gens":[[2,0],[1,1]]})", "--dmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.json().at("values") == Json({1, 2, 1, 1, 1}));
  const auto file = writeTemp("ideal.json", R"({"n":2,"gens":["x1^2","x1*x2"]})");
  CHECK(runCli({"hilbert", "--ideal", file, "--dmax", "4"}).json().at("values") == Json({1, 2, 1, 1, 1}));
  // general ideals go through a Groebner basis
  r = runCli({"hilbert", "--ideal", R"({"n":2,"gens":["x1^2 - x2^2","x1*x2"]})", "--dmax", "3", "--order", "lex"});
  CHECK(r.json().at("values") == Json({1, 2, 1, 0}));
  CHECK(runCli({"hilbert", "--ideal", "missing-file.json", "--dmax", "2"}).code == 2);
  CHECK(runCli({"hilbert", "--ideal", R"({"n":2,"gens":[[2,0]]})"}).code == 2);
  CHECK(runCli({"hilbert", "--ideal", R"({"v":2,"n":2,"gens":[]})", "--dmax", "2"}).code == 2);
}

TEST_CASE("hilbert output feeds embed") {
  const auto h = runCli({"hilbert", "--ideal", R"({"n":2,"gens":[[1,0],[0,2]]})", "--dmax", "2"});
  REQUIRE(h.code == 0);
  const auto hfFile = writeTemp("hf.json", h.out);
  const auto r = runCli({"embed", "--shakin", R"({"n":2,"powers":[2,2]})", "--hf", hfFile});
  CHECK(r.code == 0);
  CHECK(r.json().at("gens") == Json({{1, 0}, {0, 2}}));
  CHECK(runCli({"embed", "--shakin", R"({"n":2,"powers":[2,2]})", "--hf", "[1,1,0]"}).json().at("gens") ==
        Json({{1, 0}, {0, 2}}));
  const auto bad = runCli({"embed", "--shakin", R"({"n":2,"powers":[2,2]})", "--hf", "[1,3]"});
  CHECK(bad.code == 1);
  CHECK(bad.json().at("error") == "not-admissible");
  CHECK(runCli({"embed", "--shakin", R"({"n":2,"powers":[3,2]})", "--hf", "[1,1]"}).code == 2);
}

TEST_CASE("lexify") {
  auto r = runCli({"lexify", "--n", "2", "--hf", "[1,2,2,0]"});
  CHECK(r.code == 0);
  CHECK(r.json().at("gens") == Json({{2, 0}, {1, 2}, {0, 3}}));
  r = runCli({"lexify", "--n", "2", "--hf", "[1,3]"});
  CHECK(r.code == 1);
  CHECK(r.json().at("error") == "no-such-ideal");
  CHECK(r.json().at("degree") == 1);
}

TEST_CASE("distract and polarize") {
  const std::string d = R"({"n":2,"rows":[[{"c":[1,0]},{"c":[1,1]}],[{"c":[0,1]}]]})";
  auto r = runCli({"distract", "--distraction", d, "--ideal", R"({"n":2,"gens":[[2,0]]})"});
  CHECK(r.code == 0);
  CHECK(r.json().at("gens") == Json({"x1^2 + x1*x2"}));
  r = runCli({"distract", "--distraction", R"({"n":2,"rows":[[{"c":[0,1]}],[{"c":[0,1]}]]})", "--ideal",
           R"({"n":2,"gens":[[2,0]]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("selection (1,1)") != std::string::npos);
  r = runCli({"polarize", "--ideal", R"({"n":1,"gens":[[2]]})"});
  CHECK(r.code == 0);
  CHECK(r.json().at("extended_n") == 3);
  CHECK(runCli({"polarize", "--ideal", R"({"n":2,"gens":[[2,0]]})", "--distraction", d}).code == 0);
}

TEST_CASE("betti and localcoh") {
  const std::string m2 = R"({"n":2,"gens":[[2,0],[1,1],[0,2]]})";
  auto r = runCli({"betti", "--ideal", m2, "--dmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.json().at("entries") == Json({{"0,0", 1}, {"1,2", 3}, {"2,3", 2}}));
  CHECK(runCli({"betti", "--ideal", m2, "--dmax", "4", "--oracle", "taylor"}).out == r.out);
  CHECK(runCli({"betti", "--ideal", m2, "--dmax", "4", "--oracle", "cellular"}).code == 2);
  CHECK(runCli({"betti", "--ideal", m2, "--dmax", "4", "--pretty"}).out.find("j\\i") != std::string::npos);

  r = runCli({"localcoh", "--ideal", R"({"n":2,"gens":[[1,1]]})", "--window=-3:1"});
  CHECK(r.code == 0);
  CHECK(r.json().at("entries") == Json({{"1,-1", 2}, {"1,-2", 2}, {"1,-3", 2}, {"1,0", 1}}));
  CHECK(r.json().at("unbounded_below") == true);
  CHECK(runCli({"localcoh", "--ideal", R"({"n":2,"gens":[[1,1]]})", "--window", "3"}).code == 2);
}

TEST_CASE("verify") {
  const std::string a = R"({"n":2,"powers":[2,3]})";
  auto r = runCli({"verify", "macaulay-lex", "--shakin", a, "--dmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.json().at("status") == "pass");
  r = runCli({"verify", "macaulay-lex", "--base", R"({"n":2,"gens":[[0,2]]})", "--dmax", "4"});
  CHECK(r.code == 1);
  CHECK(r.json().at("failures").size() == 6);
  r = runCli({"verify", "epsilon-d-extremal", "--shakin", R"({"n":2,"powers":[2]})", "--dmax", "3", "--mode", "betti",
           "--samples", "3"});
  CHECK(r.code == 2);
  CHECK(r.json().at("status") == "rejected");
  CHECK(runCli({"verify", "macaulay-lex", "--shakin", R"({"n":3,"pieces":[{"i":1,"gens":[[3]]}]})", "--dmax", "4",
             "--budget", "100"})
            .code == 3);
  CHECK(runCli({"verify", "no-such-theorem", "--dmax", "2"}).code == 2);
  const auto first = runCli({"verify", "codistra-h0", "--n", "3", "--dmax", "5", "--samples", "10", "--seed", "9"});
  CHECK(first.code == 0);
  CHECK(first.out == runCli({"verify", "codistra-h0", "--n", "3", "--dmax", "5", "--samples", "10", "--seed", "9"}).out);
  r = runCli({"verify", "distraction-hf", "--shakin", a, "--dmax", "4", "--samples", "10"});
  CHECK(r.code == 0);
  CHECK(r.json().at("parameters").contains("distraction"));
}

TEST_CASE("usage errors and output files") {
  CHECK(runCli({}).code == 2);
  CHECK(runCli({"frobnicate"}).code == 2);
  CHECK(runCli({"hilbert", "--bogus"}).code == 2);
  CHECK(runCli({"--help"}).code == 0);
  const auto path = (std::filesystem::temp_directory_path() / "lexdist_test_out.json").string();
  std::remove(path.c_str());
  const auto r = runCli({"lexify", "--n", "2", "--hf", "[1,2]", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in).at("n") == 2);
}
