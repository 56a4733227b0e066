#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "malcev/division.hpp"
#include "malcev/io.hpp"
#include "malcev/zoo.hpp"

using namespace malcev;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::string const& args) {
  std::string command = std::string(MALCEV_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    out.append(buffer, n);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(Run const& r, std::string const& text) { return r.out.find(text) != std::string::npos; }

}  // namespace

TEST_CASE("check", "[cli]") {
  auto pe = run("check --prop pe zoo:f12");
  REQUIRE(pe.code == 0);
  REQUIRE(has(pe, "verdict: true"));

  auto mn = run("check --prop mn zoo:n1");
  REQUIRE(mn.code == 1);
  REQUIRE(has(mn, "verdict: false"));
  REQUIRE(has(mn, "fixed pair"));
  REQUIRE(has(mn, "witness valid: yes"));

  auto both = run("check --prop mn --via both zoo:n4");
  REQUIRE(both.code == 0);
  REQUIRE(has(both, "direct: true"));
  REQUIRE(has(both, "basis: true"));

  REQUIRE(run("check --prop nt --via basis zoo:f7").code == 2);
  REQUIRE(run("check --prop nosuch zoo:f7").code == 2);
  REQUIRE(run("check --prop mn zoo:nosuch").code == 2);
  REQUIRE(run("check --prop mn /nonexistent.sgp").code == 2);
  REQUIRE(run("check zoo:f7").code == 2);
}

TEST_CASE("rank, divides and structure", "[cli]") {
  auto r3 = run("rank --pv mn zoo:n1 --k 3");
  REQUIRE(r3.code == 0);
  REQUIRE(has(r3, "verdict: true"));
  auto r4 = run("rank --pv mn zoo:n1 --k 4");
  REQUIRE(r4.code == 1);
  REQUIRE(has(r4, "counterexample: <"));

  REQUIRE(run("divides zoo:f7 zoo:n2").code == 1);
  auto yes = run("divides zoo:c2 zoo:f7");
  REQUIRE(yes.code == 0);
  REQUIRE(has(yes, "witness valid: yes"));
  REQUIRE(run("divides zoo:f12 zoo:n2 --budget 1").code == 3);

  auto st = run("structure zoo:f7");
  REQUIRE(st.code == 0);
  REQUIRE(has(st, "order: 7"));
  REQUIRE(has(st, "zero: θ"));
  auto ascii = run("--ascii structure zoo:f7");
  REQUIRE(has(ascii, "zero: 0"));
  REQUIRE(run("--budget 10 structure zoo:n2").code == 3);
}

TEST_CASE("zoo output reparses", "[cli]") {
  std::string path = "/tmp/malcev_cli_n2n.sgp";
  auto z = run("zoo n2n --param 1 -o " + path);
  REQUIRE(z.code == 0);
  auto back = read_sgp(path);
  std::remove(path.c_str());
  REQUIRE(are_isomorphic(back, zoo::n2n(1).semigroup));

  auto text = run("zoo f7");
  REQUIRE(text.code == 0);
  REQUIRE(are_isomorphic(parse_sgp(text.out), zoo::f7().semigroup));
  REQUIRE(run("zoo n2n --param 3").code == 3);
  REQUIRE(run("zoo nosuch").code == 2);
}

TEST_CASE("verification output is independent of the thread count", "[cli]") {
  auto one = run("--threads 1 verify quick");
  auto four = run("--threads 4 verify-paper quick");
  REQUIRE(one.code == 0);
  REQUIRE(one.out == four.out);
  REQUIRE(has(one, "overall: PASS"));
  REQUIRE(run("verify slow").code == 2);
}
