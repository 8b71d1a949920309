// Exercises the command-line tool end to end: output text and exit codes.
// Usage: cli_tests /path/to/thompson

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "thompson/words.hpp"

namespace {

int failures = 0;

struct Run {
  std::string output;
  int exit_code = -1;
};

Run run(const std::string& bin, const std::string& args) {
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(1);
  }
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "[FAIL] " << what << "\n";
  }
}

void expect_eq(const std::string& actual, const std::string& wanted, const std::string& what) {
  expect(actual == wanted, what + ": got \"" + actual + "\", wanted \"" + wanted + "\"");
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_tests /path/to/thompson\n";
    return 1;
  }
  std::string bin = argv[1];

  Run r = run(bin, "support 'x1 x0^-1 x1^-1 x0'");
  expect_eq(chomp(r.output), "(1/2^1, 7/2^3)", "support of b");
  expect(r.exit_code == 0, "support exit code");

  r = run(bin, "support 'a^2 b a^-2'");
  expect_eq(chomp(r.output), "(1/2^5, 1/2^3)", "support of a^2 b a^-2");

  r = run(bin, "is-trivial 'b^-1 a^-2 b^-1 a^2 b a^-2 b a^2'");
  expect_eq(chomp(r.output), "true", "relation is trivial");
  expect(r.exit_code == 0, "is-trivial true exits 0");

  r = run(bin, "is-trivial x0");
  expect_eq(chomp(r.output), "false", "x0 is not trivial");
  expect(r.exit_code == 1, "is-trivial false exits 1");

  r = run(bin, "eval x0 --at 0");
  expect_eq(chomp(r.output), "0", "endpoint is fixed");
  expect(r.exit_code == 0, "eval exit code");

  r = run(bin, "eval x0 --at 1/2^2");
  expect_eq(chomp(r.output), "1/2^1", "x0 at 1/4");

  r = run(bin, "eval x0 --at 2");
  expect(r.exit_code == 2, "out-of-domain argument exits 2");

  r = run(bin, "map x0");
  expect_eq(chomp(r.output), "0:0 1/2^2:1/2^1 1/2^1:3/2^2 1:1", "breakpoints of x0");
  {
    using namespace thompson;
    expect(PLMap::parse(chomp(r.output)) == generator_map(0), "map output parses back to x0");
  }

  r = run(bin, "slopes x0");
  expect(r.output.find("slope 2^1") != std::string::npos, "slopes mentions 2^1");
  expect(r.output.find("slope 2^-1") != std::string::npos, "slopes mentions 2^-1");

  r = run(bin, "abelianize x0");
  expect_eq(chomp(r.output), "(1, -1)", "abelianization of x0");

  r = run(bin, "wreath-decompose 'a^-1 b a'");
  expect_eq(chomp(r.output), "shift=0; coeffs={1:1}", "decomposition of a^-1 b a");
  expect(r.exit_code == 0, "wreath-decompose exit code");

  r = run(bin, "wreath-decompose x1");
  expect(r.exit_code == 1, "x1 is outside the subgroup: exits 1");

  r = run(bin, "wreath-embed 'shift=1; coeffs={}'");
  expect_eq(chomp(r.output), "0:0 1/2^3:1/2^1 1/2^2:3/2^2 1/2^1:7/2^3 1:1", "embedding of a");

  r = run(bin, "wreath-decompose 'a^-1 b a' --json");
  {
    auto j = nlohmann::json::parse(r.output);
    expect(j["shift"] == 0, "decompose json shift");
    expect(j["coeffs"]["1"] == 1, "decompose json coeffs");
  }

  r = run(bin, "verify relations --nmax 5");
  expect(r.exit_code == 0, "verify relations passes");
  expect(r.output.find("[PASS] relations") != std::string::npos, "verify prints a PASS line");

  r = run(bin, "verify lemma1 --kmax 3 --json");
  expect(r.exit_code == 0, "verify lemma1 passes");
  {
    auto j = nlohmann::json::parse(r.output);
    expect(j["pass"] == true, "lemma1 json pass flag");
    expect(j["check"] == "lemma1", "lemma1 json check name");
    expect(j["counterexample"].is_null(), "lemma1 json counterexample null");
  }

  r = run(bin, "verify centralizer --radius 3 --base-kmax 2");
  expect(r.exit_code == 0, "verify centralizer passes");

  r = run(bin, "verify bogus");
  expect(r.exit_code == 2, "unknown check exits 2");

  r = run(bin, "export x0 --format csv");
  expect_eq(r.output, "x,y\n0,0\n1/2^2,1/2^1\n1/2^1,3/2^2\n1,1\n", "csv export");

  r = run(bin, "export x0 --format json");
  {
    auto j = nlohmann::json::parse(r.output);
    expect(j["domain"][0] == "0", "json export domain lo");
    expect(j["domain"][1] == "1", "json export domain hi");
    expect(j["points"][1][0] == "1/2^2", "json export breakpoint x");
    expect(j["points"][1][1] == "1/2^1", "json export breakpoint y");
  }

  r = run(bin, "graph x0");
  {
    int lines = 0;
    std::istringstream is(r.output);
    std::string line;
    while (std::getline(is, line)) {
      ++lines;
      expect(line.size() == 66, "graph line width");  // 64 columns plus borders
    }
    expect(lines == 32, "graph has 32 rows");
    expect(r.output.find('*') != std::string::npos, "graph plots points");
  }

  r = run(bin, "map 'x^2'");
  expect(r.exit_code == 2, "word syntax error exits 2");

  r = run(bin, "");
  expect(r.exit_code == 2, "missing subcommand exits 2");

  r = run(bin, "--help");
  expect(r.exit_code == 0, "--help exits 0");
  expect(r.output.find("right") != std::string::npos, "help documents the right action");

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
