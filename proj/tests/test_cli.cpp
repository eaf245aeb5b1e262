#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kacres/cli.hpp"

using namespace kacres;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("resolve report") {
  RunResult r = run({"resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"command\": \"resolve\"") != std::string::npos);
  CHECK(r.out.find("\"eta\": \"-2|1,1\"") != std::string::npos);
  CHECK(r.out.find("\"eta_natural\": \"-2|2\"") != std::string::npos);
  CHECK(r.out.find("\"truncated\": false") != std::string::npos);

  // byte-identical reruns
  RunResult r2 = run({"resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"});
  CHECK(r.out == r2.out);

  // an unbounded positive block reports no finite even-part dimension
  RunResult ri = run({"resolve", "-m", "1", "-n", "inf", "--lambda", "", "--kmax", "1"});
  CHECK(ri.code == 0);
  CHECK(ri.out.find("\"dim_l0\": null") != std::string::npos);
}

TEST_CASE("table format carries the same data") {
  RunResult t = run({"resolve", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "1", "--format",
                     "table"});
  CHECK(t.code == 0);
  CHECK(t.out.find("-1|1") != std::string::npos);
  CHECK(t.out.find("eta_natural") != std::string::npos);
  CHECK(t.out.find('{') == std::string::npos);  // not json
}

TEST_CASE("verification verbs succeed") {
  RunResult e = run({"verify-euler", "-m", "1", "-n", "2", "--lambda", "2,1", "--depth", "4"});
  CHECK(e.code == 0);
  CHECK(e.out.find("\"pass\": true") != std::string::npos);
  CHECK(e.out.find("\"residual\": []") != std::string::npos);

  RunResult i = run({"verify-incomparable", "-m", "2", "--lambda", "2,1", "--kmax", "3"});
  CHECK(i.code == 0);
  CHECK(i.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("inspection verbs") {
  RunResult c = run({"casimir", "--weights", "1|1;-1|1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"casimir_gl\": 4") != std::string::npos);
  CHECK(c.out.find("\"casimir_super\": 0") != std::string::npos);

  RunResult b = run({"bruhat", "--weights", "0|2;1|1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("\"gl_leq\": true") != std::string::npos);
  CHECK(b.out.find("\"gl_geq\": false") != std::string::npos);

  RunResult h = run({"hs", "-m", "1", "-n", "1", "--lambda", "2"});
  CHECK(h.code == 0);
  CHECK(h.out.find("\"dim_at_ones\": 2") != std::string::npos);
}

TEST_CASE("matrix realization verbs") {
  RunResult k = run({"replab-kac", "-n", "2", "--weights", "1|0,0"});
  CHECK(k.code == 0);
  CHECK(k.out.find("\"irreducible_dim\": 3") != std::string::npos);
  CHECK(k.out.find("\"proper_singular\": [\n      \"-1|1,1\"\n    ]") != std::string::npos);

  RunResult v = run({"replab-verma-gl12", "--depth", "6"});
  CHECK(v.code == 0);
  CHECK(v.out.find("\"quotient_dim_is_four\": true") != std::string::npos);
  CHECK(v.out.find("\"kac_match\": true") != std::string::npos);

  RunResult h = run({"replab-cohomology", "-m", "1", "-n", "1", "--lambda", "", "--kmax", "2"});
  CHECK(h.code == 0);
  CHECK(h.out.find("\"all_match\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"resolve", "--lambda", "2,1"}).code == 2);             // missing -m
  CHECK(run({"nonsense"}).code == 2);                               // unknown verb
  CHECK(run({"resolve", "-m", "1", "-n", "x", "--lambda", "", "--kmax", "1"}).code == 2);
  CHECK(run({"bruhat", "--weights", "0|2"}).code == 2);             // needs two weights
  CHECK(run({"replab-kac", "-n", "inf", "--weights", "0|"}).code == 2);
  CHECK(run({"casimir", "--weights", "0|2;oops"}).code == 2);       // malformed weight
  CHECK(run({"replab-verma-gl12", "--depth", "9"}).code == 4);      // resource guard
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("guard message names the guard") {
  RunResult g = run({"replab-verma-gl12", "--depth", "9"});
  CHECK(g.code == 4);
  CHECK(g.err.find("guard") != std::string::npos);
  CHECK(g.out.empty());
}

TEST_CASE("out file redirection") {
  std::string path = "cli_out_test.json";
  RunResult r = run({"casimir", "--weights", "1|1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str().find("\"casimir_gl\": 4") != std::string::npos);
  f.close();
  std::remove(path.c_str());
}
