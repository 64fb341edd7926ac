#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "jsup/canonical.hpp"
#include "jsup/cli.hpp"
#include "jsup/error.hpp"
#include "jsup/function_file.hpp"
#include "oracles.hpp"

using namespace jsup;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "jsup-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("function file round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const int w = static_cast<int>(rng() % (n + 1));
    SparseFunction f({n, w});
    for (auto x : oracle::colex_subsets(n, w)) {
      if (rng() % 2) f.set(VertexSet::from_bits(x, n), oracle::small_rational(rng, 1000));
    }
    std::optional<int> idx;
    if (rng() % 2) idx = static_cast<int>(rng() % (w + 1));
    const FunctionFile file{f, idx};
    const std::string text = serialize(file);
    const FunctionFile back = deserialize(text);
    CHECK(back.function == f);
    CHECK(back.lambda_index == idx);
    CHECK(serialize(back) == text);

    const auto path = scratch("roundtrip.json");
    write_function_file(path, file);
    CHECK(read_function_file(path).function == f);
  }
}

TEST_CASE("function file layout") {
  SparseFunction f({4, 2});
  f.set(VertexSet::from_elements({2, 3}, 4), make_rational(-3, 6));
  f.set(VertexSet::from_elements({0, 1}, 4), 2);
  const std::string text = serialize({f, 1});
  CHECK(text ==
        "{\n  \"entries\": [\n    [\n      0,\n      \"2\"\n    ],\n    [\n      5,\n      \"-1/2\"\n    ]\n  ],\n"
        "  \"format\": \"jsup-function/1\",\n  \"lambda_index\": 1,\n  \"n\": 4,\n  \"w\": 2\n}\n");
}

TEST_CASE("malformed function files are rejected") {
  const std::string good = R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[0,"1"],[3,"-2/3"]]})";
  CHECK_NOTHROW(deserialize(good));
  for (const char* bad : {
           R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[3,"1"],[0,"1"]]})",
           R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[6,"1"]]})",
           R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[0,"2/4"]]})",
           R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[0,"0"]]})",
           R"({"format":"jsup-function/1","n":4,"w":2,"lambda_index":null,"entries":[[0,"1/1"]]})",
           R"({"format":"jsup-function/1","n":4,"w":5,"lambda_index":null,"entries":[]})",
           R"({"format":"other","n":4,"w":2,"lambda_index":null,"entries":[]})",
           R"({"n":4,"w":2,"entries":[]})",
           R"([1,2,3])",
           R"({"format":"jsup-function/1",)",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(deserialize(bad), Error);
  }
  CHECK_THROWS_AS(read_function_file(scratch("missing-file.json")), Error);
}

TEST_CASE("spectrum subcommand") {
  auto r = run_cli({"spectrum", "--n", "5", "--w", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "i lambda multiplicity\n0 6 1\n1 1 4\n2 -2 5\n");
  r = run_cli({"spectrum", "--n", "5", "--w", "2", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["spectrum"][2]["lambda"] == -2);
  CHECK(doc["spectrum"][2]["multiplicity"] == 5);
}

TEST_CASE("canonical, verify, induce, reduce, partition") {
  const auto f1 = scratch("f125.json").string();
  CHECK(run_cli({"canonical", "--n", "5", "--w", "2", "--i", "1", "--out", f1}).code == 0);
  auto r = run_cli({"verify", "--func", f1, "--i", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("holds", 0) == 0);
  r = run_cli({"verify", "--func", f1, "--i", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("vertex={0,2}") != std::string::npos);
  CHECK(r.err.find("reason=") != std::string::npos);

  const auto f11 = scratch("f115.json").string();
  const auto up = scratch("up.json").string();
  CHECK(run_cli({"canonical", "--n", "5", "--w", "1", "--i", "1", "--out", f11}).code == 0);
  CHECK(run_cli({"induce", "--func", f11, "--target-w", "2", "--out", up}).code == 0);
  CHECK(read_function_file(up).function == read_function_file(f1).function);
  CHECK(read_function_file(up).lambda_index == 1);

  const auto red = scratch("red.json").string();
  CHECK(run_cli({"reduce", "--func", f1, "--j1", "0", "--j2", "1", "--out", red}).code == 0);
  const auto reduced = read_function_file(red);
  CHECK(reduced.function == SparseFunction::constant({3, 1}, -2));
  CHECK(reduced.lambda_index == 0);

  r = run_cli({"partition", "--func", f1, "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["t"] == 3);
  CHECK(doc["blocks"] == nlohmann::json::parse("[[0],[1],[2,3,4]]"));

  r = run_cli({"canonical", "--n", "6", "--w", "3", "--i", "2", "--pairs", "1:4,0:5"});
  CHECK(r.code == 0);
  CHECK(deserialize(r.out).function == build_canonical({6, 3}, 2, parse_pairing("1:4,0:5")));
}

TEST_CASE("minsupport subcommand") {
  auto r = run_cli({"minsupport", "--n", "6", "--w", "3", "--i", "3", "--algo", "both", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["min_support"] == 8);
  CHECK(doc["attained_by_canonical"] == true);
  CHECK(doc["hyperplane_status"] == "agreed");
  CHECK_FALSE(doc["stats"].contains("elapsed_seconds"));
  CHECK(run_cli({"minsupport", "--n", "6", "--w", "3", "--i", "3", "--json"}).out == r.out);

  r = run_cli({"minsupport", "--n", "6", "--w", "3", "--i", "3", "--json", "--timing"});
  CHECK(nlohmann::json::parse(r.out)["stats"].contains("elapsed_seconds"));

  r = run_cli({"minsupport", "--n", "7", "--w", "3", "--i", "2", "--algo", "bnb", "--budget", "10"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);

  r = run_cli({"minsupport", "--n", "12", "--w", "6", "--i", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("reason=size-budget") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({"spectrum", "--n", "5"}).code == 2);
  CHECK(run_cli({"spectrum", "--n", "x", "--w", "1"}).code == 2);
  CHECK(run_cli({"spectrum", "--n", "3", "--w", "4"}).code == 2);
  CHECK(run_cli({"minsupport", "--n", "5", "--w", "2", "--i", "1", "--algo", "magic"}).code == 2);
  CHECK(run_cli({"canonical", "--n", "5", "--w", "2", "--i", "1", "--pairs", "0:0"}).code == 2);
  CHECK(run_cli({"verify", "--func", scratch("absent.json").string(), "--i", "1"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("table subcommand") {
  const auto csv = scratch("table.csv").string();
  const auto r = run_cli({"table", "--max-n", "5", "--csv", csv});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,w,i,lambda,dim,bound,min_support,attained_canonical,status\n", 0) == 0);
  CHECK(r.out.find("5,2,2,-2,5,4,4,true,verified\n") != std::string::npos);
  std::ifstream in(csv);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.out);
}
