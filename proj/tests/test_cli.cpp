// End-to-end tests that spawn the installed binary and assert on exit
// codes and exact stream contents.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fgybe/solutions.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int g_run_counter = 0;

// Arguments are single-quoted for the shell; no test input contains a
// quote character.
CliResult run_cli(const std::vector<std::string>& args) {
  std::string out_path = "cli_out_" + std::to_string(g_run_counter) + ".txt";
  std::string err_path = "cli_err_" + std::to_string(g_run_counter) + ".txt";
  ++g_run_counter;
  std::string cmd = FGYBE_CLI_PATH;
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check prints verdicts and uses the exit code", "[cli]") {
  CliResult artin = run_cli({"check", "y", "y^-1 x y"});
  CHECK(artin.exit_code == 0);
  CHECK(artin.out == "T ok, M ok, B ok\n");

  CHECK(run_cli({"check", "x", "y"}).exit_code == 0);

  CliResult bad = run_cli({"check", "x y", "y"});
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "T fails"));
  CHECK(contains(bad.out, "[T] lhs: x y^2 z"));
  CHECK(contains(bad.out, "rhs: x y z"));

  CliResult parse = run_cli({"check", "x", "w"});
  CHECK(parse.exit_code == 2);
  CHECK(contains(parse.err, "position"));
}

TEST_CASE("enumerate lists, classifies, and summarizes", "[cli]") {
  CliResult zero = run_cli({"enumerate", "--max-len", "0"});
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.out, "(1, 1)  F1[m=0]"));
  CHECK(contains(zero.out, "solutions: 1, orbits: 1"));

  CliResult two = run_cli({"enumerate", "--max-len", "2"});
  CHECK(two.exit_code == 0);
  CHECK(contains(two.out, "(y, x)  F7[m=0],F13[s=1,m=1]"));
  std::size_t orbit_count =
      fgybe::group_orbits(fgybe::enumerate_solutions(2)).size();
  CHECK(contains(two.out, "solutions: 24, orbits: " +
                              std::to_string(orbit_count)));
}

TEST_CASE("enumerate output does not depend on --jobs", "[cli]") {
  CliResult one = run_cli({"enumerate", "--max-len", "4", "--jobs", "1"});
  CliResult four = run_cli({"enumerate", "--max-len", "4", "--jobs", "4"});
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
  CHECK(contains(four.err, "shards"));  // progress goes to stderr
}

TEST_CASE("records mode emits one JSON object per line", "[cli]") {
  CliResult e = run_cli({"enumerate", "--max-len", "0", "--format",
                         "records"});
  CHECK(e.exit_code == 0);
  std::istringstream lines(e.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(!line.empty());
    CHECK(line.front() == '{');
    CHECK(line.back() == '}');
    ++count;
  }
  CHECK(count == 2);  // one solution record plus the summary
  CHECK(contains(e.out, "\"cmd\":\"enumerate\""));
  CHECK(contains(e.out, "\"solutions\":1"));

  CliResult c = run_cli({"check", "y", "y^-1 x y", "--format", "records"});
  CHECK(contains(c.out, "\"solution\":true"));

  CliResult w = run_cli({"check", "x y", "y", "--format", "records"});
  CHECK(contains(w.out, "\"t\":false"));
  CHECK(contains(w.out, "\"t_lhs\":\"x y^2 z\""));

  CliResult inv = run_cli({"invariant", "s1^3", "--strands", "2", "y",
                           "y^-1 x y", "--format", "records"});
  CHECK(contains(inv.out, "\"abelian\":\"Z^1\""));
  CHECK(contains(inv.out, "\"free_rank\":1"));
}

TEST_CASE("classify reports families or rejects", "[cli]") {
  CliResult f6 = run_cli({"classify", "y", "x^-1"});
  CHECK(f6.exit_code == 0);
  CHECK(f6.out == "F6,F13[s=1,m=-1]\n");

  CliResult sporadic = run_cli({"classify", "1", "y x"});
  CHECK(sporadic.exit_code == 0);
  CHECK(sporadic.out == "unclassified\n");

  CHECK(run_cli({"classify", "x y", "y"}).exit_code == 1);
}

TEST_CASE("dual and inverse render pairs", "[cli]") {
  CliResult d = run_cli({"dual", "y", "x^-1"});
  CHECK(d.exit_code == 0);
  CHECK(d.out == "(y^-1, x)\n");

  CliResult i = run_cli({"inverse", "x", "y"});
  CHECK(i.exit_code == 0);
  CHECK(i.out == "(x, y)\n");

  CHECK(run_cli({"inverse", "y", "y^-1 x y"}).out == "(x y x^-1, x)\n");

  CliResult ni = run_cli({"inverse", "1", "y"});
  CHECK(ni.exit_code == 1);
  CHECK(contains(ni.err, "not an automorphism"));
}

TEST_CASE("braid subcommands verify, apply, and measure", "[cli]") {
  CliResult hold = run_cli({"braid-verify", "--strands", "3", "x", "y"});
  CHECK(hold.exit_code == 0);
  CHECK(hold.out == "relations hold\n");

  CliResult fail = run_cli({"braid-verify", "--strands", "3", "x y", "y"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.out == "relations fail\n");

  CHECK(run_cli({"braid-verify", "--strands", "2", "x", "y"}).exit_code == 2);

  CliResult ap = run_cli({"braid-apply", "s1", "--strands", "2", "y",
                          "y^-1 x y"});
  CHECK(ap.exit_code == 0);
  CHECK(ap.out == "x1 -> y\nx2 -> y^-1 x y\n");

  CHECK(run_cli({"braid-apply", "s1^-1", "--strands", "2", "1", "y"})
            .exit_code == 1);
  CHECK(run_cli({"braid-apply", "s2", "--strands", "2", "y", "y^-1 x y"})
            .exit_code == 2);

  CliResult hopf = run_cli({"invariant", "s1^2", "--strands", "2", "y",
                            "y^-1 x y"});
  CHECK(hopf.exit_code == 0);
  CHECK(contains(hopf.out, "gens: 2"));
  CHECK(contains(hopf.out, "abelian: Z^2"));
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"check", "y"}).exit_code == 2);
  CHECK(run_cli({"enumerate"}).exit_code == 2);
  CHECK(run_cli({"enumerate", "--max-len", "-1"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
}
