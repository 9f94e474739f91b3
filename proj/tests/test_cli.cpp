#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "fds/cli.hpp"
#include "fds/io.hpp"

using namespace fds;

namespace {

const std::string kData = FDS_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return kData + "/" + name; }

Json ok_json(const Result& r) {
  REQUIRE(r.code == cli::kOk);
  return Json::parse(r.out);
}

void check_error(const Result& r, int code, const char* kind) {
  CHECK(r.code == code);
  CHECK(r.out.empty());
  const Json e = Json::parse(r.err);
  CHECK(e["error"] == kind);
  CHECK(e["message"].is_string());
}

}  // namespace

TEST_CASE("deps") {
  const Json j = ok_json(run({"deps", data("coefficients.fds"), "--matrix"}));
  CHECK(j["matrix"] == Json::parse("[[1,0,0,1,1,0,0,0],[0,0,1,0,0,1,1,0],[1,0,0,0,0,0,0,1]]"));
  const Json f = ok_json(run({"deps", data("equiv_f.fds"), "--oracle"}));
  CHECK(f["edges"] == Json::parse("[[2,3]]"));
  const Json c = ok_json(run({"deps", data("conjugation.fds")}));
  CHECK(c["edges"] == Json::parse("[[1,2],[1,3]]"));
  const Result dot = run({"--format", "dot", "deps", data("equiv_f.fds")});
  CHECK(dot.out.find("2 -- 3") != std::string::npos);
}

TEST_CASE("equiv") {
  const Json j = ok_json(run({"equiv", data("equiv_f.fds"), data("equiv_g.fds")}));
  CHECK(j["equivalent"] == true);
  CHECK(j["permutation"] == Json::parse("[2,1,3]"));
  const Json s = ok_json(run({"equiv", data("equiv_f.fds"), data("conjugation.fds")}));
  CHECK(s["equivalent"] == false);
}

TEST_CASE("cycles and stable") {
  const Json f = ok_json(run({"cycles", data("stable_f.fds"), "--word", "1,2,3"}));
  CHECK(f["multiset"] == Json::parse("[1]"));
  CHECK(f["cycles"] == Json::parse(R"([["110"]])"));
  const Json g = ok_json(run({"cycles", data("stable_g.fds"), "--word", "1,2,3"}));
  CHECK(g["multiset"] == Json::parse("[4,4]"));
  const Json s = ok_json(run({"stable", data("stable_f.fds"), data("stable_g.fds"), "--word", "1,2,3"}));
  CHECK(s["stably_isomorphic"] == false);
}

TEST_CASE("bound") {
  const Json j = ok_json(run({"bound", data("bound_gap.fds"), "-t", "3"}));
  CHECK(j["distinct"] < j["classes"]);
  CHECK(j["classes"] == j["realized"]);
  CHECK(j["strict"] == true);
  const Json p = ok_json(run({"bound", data("bound_gap.fds"), "--perms"}));
  CHECK(p["witnesses"] == Json::parse("[[[3,1,2],[3,2,1]]]"));
}

TEST_CASE("hgraph explain") {
  const Result plain = run({"hgraph", "--graph", data("cycle4.graph"), "--word", "1,2,1,3"});
  const Json j = ok_json(plain);
  CHECK(j["arcs"].size() == 2);
  CHECK_FALSE(j.contains("notes"));
  const Json e = ok_json(run({"hgraph", "--graph", data("cycle4.graph"), "--word", "1,2,1,3", "--explain"}));
  REQUIRE(e["notes"].size() == 1);
  CHECK(e["notes"][0].get<std::string>().find("two edges") != std::string::npos);
}

TEST_CASE("psi and dlocal") {
  const Json s = ok_json(run({"psi-size", "--graph", data("single_edge.graph")}));
  CHECK(s["cardinality"]["log2"] == 16);
  CHECK(s["cardinality"]["value"] == 65536);
  const Json m = ok_json(run({"psi", data("equiv_f.fds"), "--graph", data("single_edge.graph")}));
  CHECK(m["member"] == true);
  const Json d = ok_json(run({"psi", "--graph", data("single_edge.graph"), "--sample", "5"}));
  CHECK(d.dump() == ok_json(run({"psi", "--graph", data("single_edge.graph"), "--sample", "5"})).dump());
  const Json l = ok_json(run({"dlocal", data("equiv_f.fds"), "--graph", data("path3.graph"), "-d", "2"}));
  CHECK(l["d_local"] == true);
}

TEST_CASE("monoid") {
  const Json j = ok_json(run({"monoid", data("conjugation.fds"), "--word", "1,2,3", "--conjugate", "2,1,3"}));
  CHECK(j["size"] < 100);
  CHECK(j["query"]["member"] == false);
  CHECK(j["query"]["map"]["successors"][5] == "101");
}

TEST_CASE("statespace dot file") {
  const std::string path = "statespace_test.dot";
  const Result r = run({"statespace", data("stable_g.fds"), "--word", "1,2,3", "--dot", path});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path);
  const std::string dot((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(dot.rfind("digraph", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"bound", data("bound_gap.fds"), "-t", "4"},
        std::vector<std::string>{"--seed", "7", "psi", "--graph", data("cycle4.graph"), "--sample", "3"},
        std::vector<std::string>{"--threads", "1", "bound", data("stable_g.fds"), "-t", "3"}}) {
    const Result a = run(args), b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
  }
  const Result one = run({"--threads", "1", "bound", data("stable_g.fds"), "-t", "4"});
  const Result four = run({"--threads", "4", "bound", data("stable_g.fds"), "-t", "4"});
  CHECK(one.out == four.out);
}

TEST_CASE("error exit codes") {
  check_error(run({"deps", data("missing.fds")}), cli::kIoError, "io");
  check_error(run({"deps", data("cycle4.graph")}), cli::kParseError, "parse");
  check_error(run({"compose", data("conjugation.fds"), "--word", "1,4"}), cli::kDimensionError,
              "dimension");
  check_error(run({"--max-words", "10", "bound", data("bound_gap.fds"), "-t", "3"}),
              cli::kBudgetError, "budget");
  check_error(run({"nonsense"}), cli::kParseError, "usage");
  check_error(run({}), cli::kParseError, "usage");
  ::setenv("FDS_MAX_N", "2", 1);
  check_error(run({"deps", data("conjugation.fds")}), cli::kBudgetError, "budget");
  ::setenv("FDS_MAX_N", "99", 1);
  check_error(run({"deps", data("conjugation.fds")}), cli::kBudgetError, "budget");
  ::unsetenv("FDS_MAX_N");
  CHECK(run({"deps", data("conjugation.fds")}).code == cli::kOk);
}
