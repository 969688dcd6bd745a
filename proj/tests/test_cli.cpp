// End-to-end tests for the gizctl binary: exact stdout goldens, exit codes,
// the --out flag, and byte-for-byte determinism across repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef GIZCTL_BIN
#error "GIZCTL_BIN must point at the gizctl executable"
#endif
#ifndef CORPUS_DIR
#error "CORPUS_DIR must point at the JSON corpus directory"
#endif

namespace {

struct RunResult {
  int rc;
  std::string out;  // stdout and stderr, merged
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GIZCTL_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  int rc = -1;
  if (WIFEXITED(status)) rc = WEXITSTATUS(status);
  return {rc, out};
}

std::string corpus(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help succeeds and a bare invocation is an error") {
  RunResult help = run("--help");
  CHECK(help.rc == 0);
  CHECK(contains(help.out, "standardize"));
  CHECK(contains(help.out, "orbits"));
  CHECK(contains(help.out, "--out"));

  RunResult bare = run("");
  CHECK(bare.rc == 2);
  CHECK(contains(bare.out, "A subcommand is required"));

  RunResult bogus = run("frobnicate");
  CHECK(bogus.rc == 2);
}

TEST_CASE("standardize and reverse act on --chain arguments") {
  RunResult st = run("standardize --chain \"[0,-1,-2,-3]\"");
  CHECK(st.rc == 0);
  CHECK(st.out ==
        "[0,0,-2,-3]\n"
        "moves: 1\n"
        "  shift v0 left -> [0,0,-2,-3]\n");

  RunResult rv = run("reverse --chain \"[0,-1,-2,-3]\"");
  CHECK(rv.rc == 0);
  CHECK(rv.out == "[0,-1,-3,-2]\n");

  RunResult bad = run("reverse --chain \"[0,-2]\"");
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out, "error: reversion needs a standard or 1-standard chain"));

  RunResult unparsable = run("standardize --chain \"donuts\"");
  CHECK(unparsable.rc == 2);
  CHECK(contains(unparsable.out, "error:"));
}

TEST_CASE("classify prints component types and the star condition") {
  RunResult r = run("classify " + corpus("doc01.json"));
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "C_2: +\n"
        "C_3: *\n"
        "C_4: *\n"
        "C_5: *\n"
        "C_6: +\n"
        "condition_star: true\n");
}

TEST_CASE("classify reports a missing file as a validation error") {
  RunResult r = run("classify /nonexistent.json");
  CHECK(r.rc == 2);
  CHECK(contains(r.out, "error: cannot read file: /nonexistent.json"));
}

TEST_CASE("exceptional prints the marked sets and per-component exponents") {
  RunResult r = run("exceptional " + corpus("doc01.json"));
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "E_D: {3, 5}\n"
        "E_D_reversed: {5}\n"
        "E: {3, 5}\n"
        "C_3: (k,l) = (0,1)\n"
        "C_4: (k,l) = (1,2)\n"
        "C_5: (k,l) = (0,1)\n");

  RunResult r4 = run("exceptional " + corpus("doc04.json"));
  CHECK(r4.rc == 0);
  CHECK(r4.out ==
        "E_D: {5, 7}\n"
        "E_D_reversed: {5, 7}\n"
        "E: {3, 5, 7}\n"
        "C_3: (k,l) = (1,2)\n"
        "C_4: (k,l) = (1,3)\n"
        "C_5: (k,l) = (0,1)\n"
        "C_6: (k,l) = (1,2)\n"
        "C_7: (k,l) = (0,1)\n");

  RunResult bad = run("exceptional " + corpus("doc08.json"));
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out,
                 "error: exceptional components are only defined for realizable tails"));
}

TEST_CASE("invariant prints feather moduli and the self-reversed verdict") {
  RunResult r1 = run("invariant " + corpus("doc01.json"));
  CHECK(r1.rc == 0);
  CHECK(r1.out ==
        "C_4: d = 1, m = 1\n"
        "self-reversed: no (tail is not a palindrome)\n");

  RunResult r4 = run("invariant " + corpus("doc04.json"));
  CHECK(r4.rc == 0);
  CHECK(r4.out ==
        "C_4: d = 1, m = 1\n"
        "C_6: d = 1, m = 1\n"
        "self-reversed: yes\n"
        "gamma(3) = 1@0\n"
        "gamma(4) = 3@0\n"
        "gamma(5) = 1@0\n");
}

TEST_CASE("orbits prints the decomposition or a precise error") {
  RunResult r1 = run("orbits " + corpus("doc01.json"));
  CHECK(r1.rc == 0);
  CHECK(r1.out ==
        "verdict: NotTransitive; fixed points: 1; orbits: 2 (exact)\n"
        "exceptional: {3, 5}\n"
        "part: components {4}, points {1@0}\n");

  RunResult r5 = run("orbits " + corpus("doc05.json"));
  CHECK(r5.rc == 0);
  CHECK(r5.out ==
        "verdict: NotTransitive; fixed points: 2; orbits: >= 4\n"
        "exceptional: {3, 5, 7}\n"
        "part: components {4}, points {1@0, 1@1/2}\n"
        "part: components {6}, points {3@0}\n"
        "part: components {6}, points {3@1/3}\n");

  RunResult star = run("orbits " + corpus("doc02.json"));
  CHECK(star.rc == 2);
  CHECK(contains(star.out, "error: orbit decomposition requires the star condition"));

  RunResult unreal = run("orbits " + corpus("doc08.json"));
  CHECK(unreal.rc == 2);
  CHECK(contains(unreal.out, "realizable"));
}

TEST_CASE("graph-shape explains its verdict") {
  RunResult r1 = run("graph-shape " + corpus("doc01.json"));
  CHECK(r1.rc == 0);
  CHECK(r1.out ==
        "shape: TwoVertices\n"
        "reason: the invariant distinguishes the fibration from its reversal "
        "(tail is not a palindrome)\n");

  RunResult r4 = run("graph-shape " + corpus("doc04.json"));
  CHECK(r4.rc == 0);
  CHECK(r4.out ==
        "shape: Loop\n"
        "reason: self-reversed invariant with 2 feathered inner component(s)\n"
        "gamma(3) = 1@0\n"
        "gamma(4) = 3@0\n"
        "gamma(5) = 1@0\n");
}

TEST_CASE("autgroup reports the amalgam or exits 3 when undetermined") {
  RunResult r1 = run("autgroup " + corpus("doc01.json"));
  CHECK(r1.rc == 0);
  CHECK(r1.out ==
        "shape: TwoVertices\n"
        "Aut = J ⋆_A J^∨\n"
        "generated by fibration automorphisms: true\n");

  RunResult r6 = run("autgroup " + corpus("doc06.json"));
  CHECK(r6.rc == 3);
  CHECK(contains(r6.out, "undetermined: cannot decide generation by fibrations"));
}

TEST_CASE("autgroup --reduce rewrites words of generators") {
  RunResult cancel = run("autgroup --reduce \"Rev(p) Rev(p)\"");
  CHECK(cancel.rc == 0);
  CHECK(cancel.out == "(empty)\n");

  RunResult keep = run("autgroup --reduce \"Rev(p) Rev(q)\"");
  CHECK(keep.rc == 0);
  CHECK(keep.out == "Rev(p) Rev(q)\n");

  RunResult merge = run("autgroup --reduce \"Rev(p) Rev(q)\" --all-minus-two");
  CHECK(merge.rc == 0);
  CHECK(merge.out == "Rev(#1)\n");

  RunResult fib = run("autgroup --reduce \"Rev(p) Fib(2,3,y) Fib(3,5,2y)\"");
  CHECK(fib.rc == 0);
  CHECK(fib.out == "Rev(p) Fib(6,15,9y)\n");

  RunResult bad = run("autgroup --reduce \"Twist(p)\"");
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out, "error:"));
}

TEST_CASE("lift prints exponents and scaling factors") {
  RunResult r1 = run("lift --word LR --a 1 --b 1 --P y");
  CHECK(r1.rc == 0);
  CHECK(r1.out == "(k,l) = (1,2); alpha = 1; beta = 1\n");

  RunResult r2 = run("lift --word RR --a 2 --b 3 --P \"y^2\"");
  CHECK(r2.rc == 0);
  CHECK(r2.out == "(k,l) = (0,1); alpha = 8/9; beta = 3/2\n");

  RunResult bad = run("lift --word LXR --a 1 --b 1 --P y");
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out, "error:"));
}

TEST_CASE("toric prints the dual exponent, shape, and assembled divisor") {
  RunResult r = run("toric --d 8 --e 3");
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "e' = 3; shape: Loop; Aut = A ⋆_{A∩J} J\n"
        "boundary: [0,0,-2,-3,-2]\n"
        "feather: component 4, tail [-3,-3]\n");

  RunResult bad = run("toric --d 4 --e 2");
  CHECK(bad.rc == 2);
  CHECK(contains(bad.out, "error: d and e must be coprime"));
}

TEST_CASE("enumerate sweeps report zero counterexamples") {
  RunResult small = run("enumerate --check claim3 --max-blowups 5");
  CHECK(small.rc == 0);
  CHECK(small.out == "claim3: 23 trees, 76 cases, 0 counterexamples\n");

  RunResult full = run("enumerate --check claim3 --max-blowups 7");
  CHECK(full.rc == 0);
  CHECK(full.out == "claim3: 197 trees, 1078 cases, 0 counterexamples\n");
}

TEST_CASE("export-dot emits a graphviz description") {
  RunResult r = run("export-dot " + corpus("doc01.json"));
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("graph divisor {", 0) == 0);
  CHECK(contains(r.out, "C_3 (-3)"));
  CHECK(contains(r.out, "C_4 (-2)"));
  CHECK(contains(r.out, "F_0 (-1)"));
  CHECK(contains(r.out, "1@0"));
  CHECK(r.out.back() == '\n');
}

TEST_CASE("--out redirects output to a file") {
  std::string path = "cli_out_probe.txt";
  std::remove(path.c_str());
  RunResult direct = run("classify " + corpus("doc01.json"));
  RunResult redirected = run("--out " + path + " classify " + corpus("doc01.json"));
  CHECK(redirected.rc == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("repeated runs are byte-identical") {
  for (std::string args : {"orbits " + corpus("doc05.json"),
                           "exceptional " + corpus("doc04.json"),
                           "autgroup " + corpus("doc04.json")}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
  }
}
