#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "combmat/cli.hpp"
#include "combmat/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "combmat");
  std::ostringstream out, err;
  const int code = combmat::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("combmat_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("combined prints the worked orthogonal example") {
  const auto file = write_temp("orth.mat", "3 3\n-2/3 2/3 -1/3\n-1/3 -2/3 -2/3\n-2/3 -1/3 2/3\n");
  const Result r = run({"combined", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "C(A) = 1/9\xC2\xB7[[4,4,1],[1,4,4],[4,1,4]]\n"));
  CHECK(contains(r.out, "det A = 1\n"));
  CHECK(contains(r.out, "3 3\n4/9 4/9 1/9\n1/9 4/9 4/9\n4/9 1/9 4/9\n"));
}

TEST_CASE("combined accepts JSON input and emits JSON") {
  const auto file = write_temp("a.json", R"({"rows":2,"cols":2,"entries":[["1","2"],["3","4"]]})");
  const Result r = run({"combined", file, "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["det_source"] == "-2");
  CHECK(j["combined"]["entries"][0][0] == "-2");
}

TEST_CASE("singular and malformed input") {
  const auto singular = write_temp("singular.mat", "2 2\n1 2\n2 4\n");
  Result r = run({"combined", singular});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "singular matrix"));
  r = run({"eigen2", singular});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "singular matrix"));

  const auto bad = write_temp("bad.mat", "2 2\n1 2\n3 x\n");
  r = run({"combined", bad});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 3"));

  r = run({"combined", "/nonexistent/file.mat"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "cannot open"));
}

TEST_CASE("reverse") {
  const auto file = write_temp("rev.mat", "2 2\n1 2\n3 4\n");
  const Result r = run({"reverse", file});
  CHECK(r.code == 0);
  CHECK(r.out == "2 2\n4 3\n2 1\n");
}

TEST_CASE("charpoly") {
  const auto file = write_temp("cp.mat", "3 3\n-2/3 2/3 -1/3\n-1/3 -2/3 -2/3\n-2/3 -1/3 2/3\n");
  Result r = run({"charpoly", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "quotient: \xCE\xBB^2 - (1/3)\xCE\xBB + 1/9\n"));
  CHECK(contains(r.out, "rational roots: 1 (x1)\n"));
  CHECK(contains(r.out, "galois: order_2\n"));

  const auto raw = write_temp("raw.mat", "2 2\n1 2\n3 4\n");
  r = run({"charpoly", raw, "--raw"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "charpoly: \xCE\xBB^2 - 5\xCE\xBB - 2\n"));
  CHECK(contains(r.out, "quotient: none (p(1) = -6)"));
}

TEST_CASE("eigen2") {
  const auto file = write_temp("e2.mat", "2 2\n1 2\n3 4\n");
  const Result r = run({"eigen2", file});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "eigenvalue 1: eigenvector (1, 1)\n"));
  CHECK(contains(r.out, "eigenvalue -5: eigenvector (1, -1)\n"));
  CHECK(contains(r.out, "P^-1 = 1/2\xC2\xB7[[1,1],[-1,1]]\n"));
  CHECK(contains(r.out, "P D P^-1 = C(A): yes\n"));

  const auto big = write_temp("e3.mat", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(run({"eigen2", big}).code == 1);
}

TEST_CASE("sample") {
  Result r = run({"sample", "--group", "special_linear_integer", "--dim", "3", "--seed", "5", "--det-sign", "-1"});
  CHECK(r.code == 0);
  const auto file = write_temp("sample.mat", r.out);
  const Result again = run({"sample", "--group", "special_linear_integer", "--dim", "3", "--seed", "5",
                            "--det-sign", "-1"});
  CHECK(again.out == r.out);
  CHECK(run({"combined", file}).code == 0);

  r = run({"sample", "--group", "quaternion", "--dim", "3", "--seed", "5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown group"));
  CHECK(run({"sample", "--group", "orthogonal", "--dim", "3"}).code == 2);
}

TEST_CASE("check") {
  Result r = run({"check", "--suite", "fixed_vector", "--trials", "20", "--dims", "2..4", "--seed", "42"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "fixed_vector pass trials=60 seed=42"));

  r = run({"check", "--suite", "all", "--trials", "10", "--dims", "2..3", "--seed", "7"});
  CHECK(r.code == 0);
  for (const auto& s : combmat::registry()) CHECK(contains(r.out, s.name + " "));

  r = run({"check", "--suite", "nope", "--trials", "10"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "registered:"));

  CHECK(run({"check", "--suite", "all", "--dims", "5..2"}).code == 2);
  CHECK(run({"check", "--suite", "all", "--dims", "x"}).code == 2);
}

TEST_CASE("check --json matches the report schema") {
  const Result r = run({"check", "--suite", "hadamard_group_claim", "--trials", "50", "--seed", "7", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 1);
  const auto rep = combmat::report_from_json(j["reports"][0]);
  CHECK(rep.verdict == combmat::Verdict::gap_documented);
  CHECK(rep.counterexample->inputs.size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"combined"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
