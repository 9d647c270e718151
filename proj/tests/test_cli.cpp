#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "graphpoly/cli.hpp"
#include "graphpoly/families.hpp"
#include "graphpoly/io.hpp"

using namespace graphpoly;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("graphpoly_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string graph_file(const std::string& name, const Graph& g) {
  return write_temp(name, graph_to_json(g).dump());
}

}  // namespace

TEST_CASE("cli poly and divergence on K4") {
  const auto k4 = graph_file("k4.json", corpus::k4());
  auto r = run({"poly", "--graph", k4});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '+') == 15);

  r = run({"poly", "--graph", k4, "--method", "trees", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["term_count"] == 16);
  CHECK(j["manifest"]["command"] == "poly");
  CHECK(j["manifest"]["version"] == kVersion);
  CHECK(j["manifest"]["inputs"][0]["fnv1a64"] == hex64(fnv1a64(graph_to_json(corpus::k4()).dump())));

  r = run({"divergence", "--graph", k4});
  CHECK(r.code == 0);
  CHECK(r.out == "primitive log divergent: yes\n");
  r = run({"divergence", "--graph", graph_file("tri.json", corpus::triangle())});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("primitive log divergent: no\n", 0) == 0);
}

TEST_CASE("cli fit prints the K4 polynomial") {
  const auto k4 = graph_file("k4.json", corpus::k4());
  const auto r = run({"fit", "--graph", k4, "--fit", "2,3,5,7,11", "--validate", "13"});
  CHECK(r.code == 0);
  CHECK(r.out == "q^4+q^3+2q^2+q+1 [polynomial]\n");
}

TEST_CASE("cli count, strata, trace, subspaces, identities, dodgson") {
  const auto k4 = graph_file("k4.json", corpus::k4());
  auto r = run({"count", "--graph", k4, "--q", "2,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q=2 affine=") != std::string::npos);
  CHECK(r.out.find("projective=35\n") != std::string::npos);
  CHECK(r.out.find("projective=130\n") != std::string::npos);
  CHECK(run({"count", "--graph", k4, "--q", "3", "--method", "brute"}).out ==
        run({"count", "--graph", k4, "--q", "3"}).out);

  r = run({"strata", "--graph", k4, "--i", "1", "--q", "2,3", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json s = Json::parse(r.out)["result"]["counts"];
  CHECK(s[0]["count"] == "7");
  CHECK(s[1]["count"] == "13");

  r = run({"trace", "--graph", k4});
  CHECK(r.code == 0);
  CHECK(r.out.find("square identity: ok") != std::string::npos);
  CHECK(r.out.find("product identity: ok") != std::string::npos);

  r = run({"subspaces", "--graph", k4, "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["result"]["members"].size() == 14);

  r = run({"identities", "--graph", k4});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAILED") == std::string::npos);

  const auto cfg = write_temp("cfg.json", R"({"edges": 3, "basis": [[1, 1, 1]]})");
  r = run({"identities", "--config", cfg});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda 1") != std::string::npos);

  r = run({"dodgson", "--graph", k4});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '+') == 15);
  r = run({"dodgson", "--graph", k4, "--rows", "0", "--cols", "0", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["result"]["polynomial"]["terms"].size() > 0);
}

TEST_CASE("cli family") {
  auto r = run({"family", "wheel", "3", "--emit", "graph"});
  CHECK(r.code == 0);
  CHECK(parse_graph(r.out) == wheel(3));
  r = run({"family", "wheel", "3", "--emit", "poly"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2*A0*A1*A2") != std::string::npos);
  CHECK(run({"family", "wheel", "4", "--emit", "identities"}).code == 0);
  CHECK(run({"family", "wheel", "4", "--emit", "matrix"}).code == 0);
  r = run({"family", "example12", "--emit", "graph"});
  CHECK(parse_graph(r.out) == example_graph_12());
  CHECK(run({"family", "wheel", "2"}).code == 2);
  CHECK(run({"family", "prism", "3"}).code == 2);
}

TEST_CASE("cli period is independent of the worker count") {
  const auto bubble = graph_file("bubble.json", corpus::bubble());
  const auto a = run({"period", "--graph", bubble, "--samples", "20000", "--seed", "3", "--format", "json",
                      "--threads", "1"});
  const auto b = run({"period", "--graph", bubble, "--samples", "20000", "--seed", "3", "--format", "json",
                      "--threads", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["manifest"]["seed"] == "3");
  CHECK(j["result"]["estimate"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(a.err.find("threads=1") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"poly"}).code == 1);
  CHECK(run({"poly", "--graph", "/nonexistent/g.json"}).code == 2);
  CHECK(run({"poly", "--graph", write_temp("bad.json", R"({"vertices": 2, "edges": [[0, 5]]})")}).code == 2);
  const auto k4 = graph_file("k4.json", corpus::k4());
  CHECK(run({"count", "--graph", k4, "--q", "4"}).code == 2);
  CHECK(run({"count", "--graph", k4, "--q", "7", "--method", "brute", "--budget", "1000"}).code == 3);
  CHECK(run({"period", "--graph", graph_file("tri.json", corpus::triangle())}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
