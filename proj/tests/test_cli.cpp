// End-to-end checks of the command-line front end: output text, exit codes,
// and byte stability. Each case shells out to the real binary.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string scratch_path(const char* tag) {
  const char* dir = std::getenv("TMPDIR");
  static int counter = 0;
  return std::string(dir && *dir ? dir : "/tmp") + "/cucalc_cli_" +
         std::to_string(::getpid()) + "_" + tag + "_" + std::to_string(counter++);
}

CliResult run_cli(const std::string& args) {
  const std::string out_path = scratch_path("out");
  const std::string err_path = scratch_path("err");
  const std::string cmd =
      std::string(CUCALC_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("fusion products print the class literal") {
  CliResult r = run_cli("fusion s3 rep:0,0,1 rep:0,0,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "rep:1,1,1\n");

  CliResult c = run_cli("fusion cyclic:4 rep:0,1,0,0 rep:0,0,0,1");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "rep:1,0,0,0\n");
}

TEST_CASE("order reports the relation and both way-below directions") {
  CliResult r = run_cli("order uhf2 uhf2:compact:1 uhf2:soft:1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ORDER GT\nWAY_BELOW x<<y no\nWAY_BELOW y<<x yes\n");

  CliResult s = run_cli("order nat nat:3 nat:inf");
  CHECK(s.exit_code == 0);
  CHECK(s.out == "ORDER LT\nWAY_BELOW x<<y yes\nWAY_BELOW y<<x no\n");
}

TEST_CASE("axioms runs are byte-identical for a fixed seed") {
  const std::string args = "axioms uhf2 --seed 99 --samples 40 --format structured";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("SUITE uhf2\nSEED 99\nSAMPLES 40\n") == 0);
  CHECK(a.out.find("RESULT PASS\n") != std::string::npos);
}

TEST_CASE("the way-below mutation is detected and exits nonzero") {
  CliResult r = run_cli("axioms rat --samples 50 --mutate wb=leq --format structured");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("AXIOM WB_NONCOMPACT_PROBE FAIL") != std::string::npos);
  CHECK(r.out.find("RESULT FAIL") != std::string::npos);
}

TEST_CASE("example suites run through the axioms subcommand") {
  CliResult r = run_cli("axioms example:nonstable --samples 60 --format structured");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("KEY atoms-left 1\n") != std::string::npos);
  CHECK(r.out.find("KEY atoms-right 4\n") != std::string::npos);
  CHECK(r.out.find("SUITE frozen:nonstable\n") != std::string::npos);
}

TEST_CASE("example --list prints the family templates") {
  CliResult r = run_cli("example --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nonstable\n") != std::string::npos);
  CHECK(r.out.find("pullback-uhf:<n>\n") != std::string::npos);
  CHECK(run_cli("example").exit_code == 2);  // neither a name nor --list
}

TEST_CASE("example describes an entry without verifying by default") {
  CliResult r = run_cli("example nonstable");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("EXAMPLE nonstable\n") == 0);
  CHECK(r.out.find("CARRIER nat\n") != std::string::npos);
  CHECK(r.out.find("CARRIER fn:nat:4\n") != std::string::npos);
  CHECK(r.out.find("RESULT") == std::string::npos);
}

TEST_CASE("exit codes separate parse errors from domain errors") {
  CHECK(run_cli("example bogus").exit_code == 3);          // unknown example
  CHECK(run_cli("fusion s3 rep:1 rep:0,0,1").exit_code == 2);   // wrong arity literal
  CHECK(run_cli("order nat nat:x nat:1").exit_code == 2);  // malformed literal
  CHECK(run_cli("order nat rat:1 nat:1").exit_code == 2);  // wrong carrier literal
  CHECK(run_cli("axioms uhf1").exit_code == 2);            // base below range
  CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                       // missing subcommand
  CHECK(run_cli("order uhf2 uhf2:compact:1/3 uhf2:soft:1").exit_code == 3);  // bad denominator
}

TEST_CASE("--out mirrors stdout into a file") {
  const std::string path = scratch_path("mirror");
  CliResult r = run_cli("order nat nat:2 nat:5 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(slurp(path) == r.out);
  std::remove(path.c_str());
}
