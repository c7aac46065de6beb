// End-to-end tests that exercise the installed command-line binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FIBO_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("codec subcommands") {
  RunResult r = run("unrank 13 100");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(1,1,1,0,2,0,2,1,1,1,0,2,1)\n");

  r = run("rank 13 \"(1,1,1,0,2,0,2,1,1,1,0,2,1)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "100\n");

  r = run("zeck 100");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "11 6 4\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("unrank 5 7").exit_code == 2);   // rank out of range
  CHECK(run("rank 4 \"(1,1,1)\"").exit_code == 2); // height mismatch
  CHECK(run("zeck 0").exit_code == 2);
  CHECK(run("table SFbar 5 --format=yaml").exit_code == 2);
  CHECK(run("verify nonsense").exit_code == 2);
}

TEST_CASE("table text output") {
  RunResult r = run("table SFbar 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("6+4q+q^2") != std::string::npos);
  CHECK(r.out.substr(0, 2) == "1\n");
}

TEST_CASE("table csv output") {
  RunResult r = run("table SFbar 5 --format=csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5,3,6 4 1\n") != std::string::npos);
}

TEST_CASE("table json output is deterministic") {
  RunResult a = run("table cF 6 --format=json");
  RunResult b = run("table cF 6 --format=json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"family\": \"cF\"") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes and shape") {
  RunResult r = run("verify connection --max-n 4 --max-x 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS ") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);
  CHECK(r.out.find(" 0 failures") != std::string::npos);

  RunResult again = run("verify connection --max-n 4 --max-x 2");
  CHECK(again.out == r.out); // deterministic ordering

  RunResult gf = run("verify gf --max-n 6 --series-order 8");
  CHECK(gf.exit_code == 0);
}
