// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the installed-shape binary and inspects its stdout and exit status.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

struct Run {
  int status = -1;
  std::string out;
  json doc;
};

Run cli(const std::string& args) {
  Run r;
  std::string cmd = std::string("'") + BRAUER_KIT_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  if (!r.out.empty() && r.out[0] == '{') r.doc = json::parse(r.out);
  return r;
}

json e(int i, int j) {
  json m = json::array({json::array({"0", "0"}), json::array({"0", "0"})});
  m[i][j] = "1";
  return m;
}

}  // namespace

TEST_CASE("azumaya-check on Q(2,3) over GF(5)") {
  Run r = cli("azumaya-check --ring 'GF(5)' --quaternion 2,3");
  CHECK(r.status == 0);
  CHECK(r.doc["ok"] == true);
  CHECK(r.doc["result"]["is_azumaya"] == true);
  CHECK(r.doc["result"]["n"] == 1);
  CHECK(r.doc["result"]["enveloping_rank"] == 16);
}

TEST_CASE("param-conic over QQ from [1:1:0]") {
  Run r = cli("param-conic --ring QQ --a 1 --b 1 --point 1,1,0");
  CHECK(r.status == 0);
  CHECK(r.doc["result"]["transform"] == "identity");
  CHECK(r.doc["result"]["pointed"]["y0"] == "1");
  CHECK(r.doc["result"]["table"].size() > 0);
  REQUIRE(r.doc["verification"].size() == 1);
  CHECK(r.doc["verification"][0]["check"] == "roundtrip");
  CHECK(r.doc["verification"][0]["passed"] == true);
}

TEST_CASE("delta of [1:0] is spanned by E00 and E01") {
  Run r = cli("delta --ring 'GF(5)' --n 1 --point 1,0");
  CHECK(r.status == 0);
  const json& ms = r.doc["result"]["matrices"];
  REQUIRE(ms.size() == 2);
  CHECK(ms[0]["entries"] == e(0, 0));
  CHECK(ms[1]["entries"] == e(0, 1));
}

TEST_CASE("usage errors exit 64") {
  for (const char* args : {"", "frobnicate", "delta --bogus 1", "delta --n 1 --point 1,0", "selftest --level slow"}) {
    Run r = cli(args);
    CAPTURE(args);
    CHECK(r.status == 64);
    CHECK(r.doc["error"] == "UsageError");
  }
  CHECK(cli("--help").status == 0);
}

TEST_CASE("domain errors exit 2 with the module code") {
  Run r = cli("delta --ring 'GF(9)' --point 1,0");
  CHECK(r.status == 2);
  CHECK(r.doc["error"] == "NotPrime");
  Run neg = cli("find-ideal --ring 'QQ' --quaternion=-1,-1 --bound 3");
  CHECK(neg.status == 0);
  CHECK(neg.doc["result"]["status"] == "unknown");
  Run unit = cli("azumaya-check --ring 'GF(5)' --quaternion 0,1");
  CHECK(unit.status == 2);
  CHECK(unit.doc["error"] == "NotUnit");
  CHECK(cli("param-conic --ring QQ --a -1 --b 1 --point 1,1,0").doc["error"] == "NotOnConic");
}

TEST_CASE("selftest quick passes") {
  Run r = cli("selftest --level quick");
  CHECK(r.status == 0);
  CHECK(r.doc["result"]["passed"] == true);
  CHECK(r.doc["result"]["criteria"][0]["id"] == 1);
  CHECK(r.doc["result"]["criteria"][0]["passed"] == true);
}

TEST_CASE("selftest names the violating triple of a corrupted table") {
  Run r = cli(std::string("selftest --level full --algebra '@") + BRAUER_FIXTURES + "/corrupted_m2.json'");
  CHECK(r.status == 2);
  CHECK(r.doc["error"] == "SelftestFailed");
  const std::string detail = r.doc["detail"];
  CHECK(detail.find("associativity") != std::string::npos);
  CHECK(detail.find("(1,2,1)") != std::string::npos);
  // The regular suites still ran and passed.
  CHECK(r.doc["result"]["criteria"].size() == 10);
}

TEST_CASE("no-verify and determinism") {
  Run quiet = cli("split --ring 'GF(5)' --algebra 'builtin:Q(2,3)' --no-verify");
  CHECK(quiet.status == 0);
  CHECK(quiet.doc["verification"].empty());
  std::string args = "param-conic --ring QQ --a 2 --b -1 --point 1,1,1 --seed 5";
  Run a = cli(args), b = cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("every subcommand answers with an envelope") {
  const char* runs[] = {
      "quat-split --ring 'GF(7)' --b 3",
      "conic-points --ring 'GF(5)' --a 2 --b 3",
      "delta-inv --ring 'GF(5)' --ideal '[[[1,0],[0,0]],[[0,1],[0,0]]]'",
      "conjugator --ring 'GF(5)' --matrix '[[1,2],[3,4]]'",
      "aut-to-pgl --ring 'GF(7)' --matrix '[[2,1],[1,1]]'",
      "chatelet --ring 'GF(3)' --algebra 'builtin:M2'",
      "find-ideal --ring 'Z/9' --algebra builtin:M2",
  };
  for (const char* args : runs) {
    CAPTURE(args);
    Run r = cli(args);
    CHECK(r.status == 0);
    CHECK(r.doc["ok"] == true);
    for (const auto& v : r.doc["verification"]) CHECK(v["passed"] == true);
  }
}
