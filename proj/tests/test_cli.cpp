#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(NFROB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string fixture(const std::string& name) {
  return std::string(NFROB_FIXTURES_DIR) + "/" + name;
}

std::string strip_timing(std::string report) {
  json j = json::parse(report);
  j.erase("timing_ms");
  return j.dump();
}

}  // namespace

TEST_CASE("exit code contract") {
  // 0: all verdicts pass
  CHECK(run_cli("frobdim " + fixture("a2.json")).exit_code == 0);
  CHECK(run_cli("ybe " + fixture("tpoly2.json")).exit_code == 0);
  CHECK(run_cli("theorem-a " + fixture("m2z.json") + " --epsilon 1,0,0,1")
            .exit_code == 0);
  // 1: a mathematical verdict failed
  CHECK(run_cli("frobenius-check " + fixture("a2.json") + " --deterministic")
            .exit_code == 1);
  CHECK(run_cli("validate " + fixture("bad_assoc.json")).exit_code == 1);
  // 2: input errors
  CHECK(run_cli("frobdim /nonexistent.json").exit_code == 2);
  CHECK(run_cli("frobdim " + fixture("bad_prime.json")).exit_code == 2);
  CHECK(run_cli("frobdim " + fixture("infinite.json")).exit_code == 2);
  CHECK(run_cli("frobdim " + fixture("bad_assoc.json")).exit_code == 2);
  CHECK(run_cli("frobenius-data " + fixture("zx2.json")).exit_code == 2);
  CHECK(run_cli("frobenius-data " + fixture("a2.json") + " --deterministic")
            .exit_code == 2);
  CHECK(run_cli("ybe " + fixture("a2.json") + " --generator 5").exit_code == 2);
}

TEST_CASE("reports are valid JSON on stdout, including error reports") {
  RunResult ok = run_cli("frobdim " + fixture("cyclic9.json"));
  json rep = json::parse(ok.out);
  CHECK(rep["data"]["frobdim"] == 10);
  CHECK(rep["data"]["dim"] == 9);

  RunResult err = run_cli("frobdim " + fixture("bad_prime.json"));
  json erep = json::parse(err.out);
  CHECK(erep["error"]["code"] == "NF_ERROR_NOT_PRIME");
  CHECK(erep["all_pass"] == false);
}

TEST_CASE("text format is plain and uncolored when piped") {
  RunResult res = run_cli("central-basis " + fixture("a2.json") +
                          " --check-central --format text");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("verdict frobdim: 1") != std::string::npos);
  CHECK(res.out.find("\033[") == std::string::npos);
}

TEST_CASE("same seed, same bytes") {
  for (const std::string& args :
       {"frobenius-check " + fixture("m2.json") + " --seed 7",
        "ybe " + fixture("zc3.json"),
        "ar " + fixture("tpoly2.json") + " --epsilon 0,1",
        "central-basis " + fixture("c3f5.json")}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(strip_timing(first.out) == strip_timing(second.out));
  }
}

TEST_CASE("integer algebras are reported as lattices") {
  RunResult res = run_cli("frobdim " + fixture("zx2.json"));
  CHECK(res.exit_code == 0);
  json rep = json::parse(res.out);
  CHECK(rep["data"]["central_rank"] == 2);
  CHECK(rep["data"]["snf_diagonal"] == json::parse(R"(["1","1"])"));
  CHECK_FALSE(rep["data"].contains("frobdim"));
}

TEST_CASE("ybe reports one verdict pair per generator") {
  RunResult res =
      run_cli("ybe " + fixture("m2.json") + " --which twist --all-generators");
  CHECK(res.exit_code == 0);
  json rep = json::parse(res.out);
  CHECK(rep["data"]["items"].size() == 4);
  int qybe_verdicts = 0;
  for (const json& v : rep["verdicts"]) {
    CHECK(v["pass"] == true);
    if (v["name"].get<std::string>().rfind("qybe[", 0) == 0) ++qybe_verdicts;
  }
  CHECK(qybe_verdicts == 4);
}

TEST_CASE("flags reach the engine") {
  RunResult res = run_cli("frobenius-check " + fixture("a2.json") +
                          " --trials 2 --height 1024 --seed 99");
  json rep = json::parse(res.out);
  CHECK(rep["flags"]["trials"] == 2);
  CHECK(rep["flags"]["height"] == 1024);
  CHECK(rep["flags"]["seed"] == 99);
  CHECK(rep["verdicts"][0]["certified"] == false);
  // (3/1024)^2
  CHECK(rep["verdicts"][0]["failure_bound"] == "9/1048576");
}
