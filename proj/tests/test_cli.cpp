#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SPIRALEMB_CLI_PATH
#error "SPIRALEMB_CLI_PATH must be defined by the build"
#endif

namespace {

const std::string kCli = SPIRALEMB_CLI_PATH;

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/spiralemb_cli_test_") + name;
}

}  // namespace

TEST_CASE("exit code contract: pass, fail, usage") {
  CHECK(run("plan --mode family --epsilon 0.1") == 0);
  // Verification failure (shrunk containment ball) exits 1, report still valid.
  CHECK(run("verify --check contained --map spiral --lambda 0.1 --delta 0.05 --r 0.2 "
            "--radius 0.3 --nx 50 --ny 50") == 1);
  CHECK(run("no-such-subcommand") == 2);
  CHECK(run("plan --mode nope") == 2);
  CHECK(run("spiral --lambda -1 --out " + tmp_path("bad.csv")) == 2);
  CHECK(run("plan --mode kh --epsilon 0.1 --T 0.2") == 2);  // T <= 1/3
}

TEST_CASE("spiral CSV has the documented header and grid size") {
  const std::string out = tmp_path("spiral.csv");
  REQUIRE(run("spiral --A 1 --B 1 --lambda 0.05 --delta 0 --r 0 --grid 40 --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("x,y,u,v\n", 0) == 0);
  const long rows = std::count(text.begin(), text.end(), '\n');
  CHECK(rows == 1 + 40 * 40);
}

TEST_CASE("CSV output is byte-identical across runs and thread counts") {
  const std::string out1 = tmp_path("det1.csv");
  const std::string out2 = tmp_path("det2.csv");
  const std::string cmd = "double-spiral --epsilon 0.1 --grid 80 --out ";
  setenv("SPIRALEMB_THREADS", "1", 1);
  REQUIRE(run(cmd + out1) == 0);
  setenv("SPIRALEMB_THREADS", "4", 1);
  REQUIRE(run(cmd + out2) == 0);
  unsetenv("SPIRALEMB_THREADS");
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("chain-verify emits the documented JSON fields") {
  const std::string out = tmp_path("chain.json");
  REQUIRE(run("chain-verify --epsilon 0.1 --samples 50000 --out " + out) == 0);
  const std::string text = slurp(out);
  for (const char* field : {"\"sup_norm\"", "\"bound\"", "\"c\"", "\"C\"", "\"passed\": true",
                            "\"violations\": 0"}) {
    CAPTURE(field);
    CHECK(text.find(field) != std::string::npos);
  }
}

TEST_CASE("figure subcommand writes SVG and summary") {
  const std::string svg = tmp_path("fig.svg");
  const std::string csv = tmp_path("fig.csv");
  REQUIRE(run("figure --name square-to-ball --out " + svg + " --points-out " + csv) == 0);
  const std::string text = slurp(svg);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("<circle") != std::string::npos);
  CHECK(text.find("<polyline") != std::string::npos);
  CHECK(slurp(csv).rfind("x,y,u,v\n", 0) == 0);
}

TEST_CASE("config file supplies defaults and flags override") {
  const std::string cfg = tmp_path("cfg.json");
  {
    std::ofstream out(cfg);
    out << "{\"lambda\": 0.25, \"grid\": 10}\n";
  }
  const std::string out1 = tmp_path("cfg_a.csv");
  const std::string out2 = tmp_path("cfg_b.csv");
  const std::string out3 = tmp_path("cfg_c.csv");
  REQUIRE(run("spiral --config " + cfg + " --out " + out1) == 0);
  REQUIRE(run("spiral --lambda 0.25 --grid 10 --out " + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  // Explicit flag wins over the config value.
  REQUIRE(run("spiral --config " + cfg + " --lambda 0.5 --out " + out3) == 0);
  REQUIRE(run("spiral --lambda 0.5 --grid 10 --out " + out2) == 0);
  CHECK(slurp(out3) == slurp(out2));
}

TEST_CASE("verify subcommand covers all five checks") {
  CHECK(run("verify --check symplectic --map beta2 --epsilon 0.1 --nx 40 --ny 40 "
            "--tol 1e-10") == 0);
  CHECK(run("verify --check injective --map spiral --lambda 0.1 --delta 0.25 --r 0.2 "
            "--nx 80 --ny 80") == 0);
  CHECK(run("verify --check avoids --map spiral --lambda 0.1 --r 0 --delta 0.05 --radius 0 "
            "--nx 40 --ny 40") == 0);
  CHECK(run("verify --check area --map identity --samples 20000") == 0);
  CHECK(run("verify --check contained --map f --epsilon 0.1 --radius 2.0 --nx 40 --ny 40") == 0);
}
