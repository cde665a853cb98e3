#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bridge.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using Strings = std::vector<std::string>;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "pdpoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = pdpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("pdpoly_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("compute on an edge list") {
  const auto k4 = write_temp("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run({"compute", "--in", k4});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 4);
  CHECK(j["pd"] == Strings{"0", "4", "6", "4", "1"});

  r = run({"compute", "--in", k4, "--which", "all", "--method", "plain"});
  REQUIRE(r.code == 0);
  j = r.doc();
  CHECK(j["zf"] == Strings{"0", "0", "0", "4", "1"});
  CHECK(j["dom"] == Strings{"0", "4", "6", "4", "1"});
}

TEST_CASE("threshold subcommand") {
  const auto r = run({"threshold", "--bits", "001"});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  CHECK(j["pd"] == Strings{"0", "3", "3", "1"});
  CHECK(j["blocks"] == json::parse("[[0,2],[1,1]]"));
  CHECK(run({"threshold", "--bits", "0x1"}).code == 3);
}

TEST_CASE("roots subcommand") {
  const auto k3 = write_temp("k3.g6", "Bw\n");
  const auto r = run({"roots", "--in", k3});
  REQUIRE(r.code == 0);
  const auto j = r.doc();
  CHECK(j["classification"] == "F_union");
  CHECK(j["distinct_count"] == 3);
  bool found = false;
  for (const auto& z : j["roots"]) {
    const double re = z[0];
    const double im = z[1];
    if (std::abs(re + 1.5) < 1e-9 && std::abs(std::abs(im) - 0.8660254037844386) < 1e-9) found = true;
  }
  CHECK(found);
}

TEST_CASE("forts and tail subcommands") {
  const auto s4 = write_temp("s4.txt", "4 3\n0 3\n1 3\n2 3\n");
  auto r = run({"forts", "--in", s4, "--ip-bound"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["forts"].size() == 5);
  CHECK(j["neighborhood_family"].size() == 4);
  CHECK(j["ip_bound"]["holds"] == true);

  r = run({"tail", "--in", s4, "--kmax", "2"});
  REQUIRE(r.code == 0);
  j = r.doc();
  CHECK(j["tail"].size() == 3);
  CHECK(j["tail"][1]["power"] == 3);
  CHECK(j["tail"][1]["count"] == "4");
}

TEST_CASE("decompose verifies against direct counting") {
  const auto e3 = write_temp("e3.g6", "B?\n");
  const auto k1 = write_temp("k1.g6", "@\n");
  auto r = run({"decompose", "--op", "join", "--in", e3, "--in", k1});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["pd"] == Strings{"0", "1", "6", "4", "1"});
  CHECK(j["verified"] == true);

  const auto p2 = write_temp("p2.g6", "A_\n");
  const auto p3 = write_temp("p3.txt", "3 2\n0 1\n1 2\n");
  r = run({"decompose", "--op", "identify", "--in", p2, "--gadget", p3 + ":1", "--gadget", p3 + ":1"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["pd"] == Strings{"0", "0", "9", "18", "15", "6", "1"});

  r = run({"decompose", "--op", "identify", "--in", p2, "--gadget", p3 + ":0", "--gadget", p3 + ":1"});
  CHECK(r.code == 3);

  r = run({"decompose", "--op", "corona", "--in", p2, "--k", "2", "--no-verify"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["verified"].is_null());
}

TEST_CASE("catalog subcommand") {
  const auto path = testing::data_path("graphs4.g6").string();
  auto r = run({"catalog", "--in", path, "--audit", "uniqueness", "--complete"});
  REQUIRE(r.code == 0);
  auto j = r.doc();
  CHECK(j["scope"] == "catalog");

  r = run({"catalog", "--in", path, "--audit", "unimodality"});
  REQUIRE(r.code == 0);

  const auto partial = write_temp("partial.g6", "Bw\nnot-a-graph\nBW\n");
  r = run({"catalog", "--in", partial, "--audit", "unimodality"});
  CHECK(r.code == 6);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("gen subcommand") {
  auto r = run({"gen", "--family", "complete", "--params", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "Bw\n");
  CHECK(run({"gen", "--family", "complete_bipartite", "--params", "3"}).code == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--in", "/nonexistent/graph.g6"}).code == 3);
  const auto bad = write_temp("bad.g6", "Bww\n");
  CHECK(run({"compute", "--in", bad}).code == 3);
  const auto big = write_temp("big.txt", "30 1\n0 1\n");
  CHECK(run({"compute", "--in", big}).code == 4);
}
