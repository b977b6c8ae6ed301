#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("REPT_CLI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "REPT_CLI_BIN must point at the cli binary");
  return p;
}

struct CliResult {
  int exit_code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("rept_cli_out_" + std::to_string(counter++));
  std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  fs::remove(out);
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("rept_cli_test_" + std::to_string(::getpid() + std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("gen then exact then estimate round trip") {
  TempDir tmp;
  fs::path graph = tmp.path / "g.txt";
  auto gen = run_cli("gen --model er --nodes 40 --param 0.25 --seed 5 --out " +
                     graph.string());
  CHECK(gen.exit_code == 0);
  REQUIRE(fs::exists(graph));

  fs::path exact_out = tmp.path / "exact.json";
  auto exact = run_cli("exact --input " + graph.string() + " --eta --out " +
                       exact_out.string());
  CHECK(exact.exit_code == 0);
  auto doc = nlohmann::json::parse(slurp(exact_out));
  CHECK(doc["tau"].is_number());
  CHECK(doc["eta"].is_number());

  fs::path est_out = tmp.path / "est.json";
  auto est = run_cli("estimate --method rept --m 4 --c 4 --seed 9 --input " +
                     graph.string() + " --out " + est_out.string());
  CHECK(est.exit_code == 0);
  auto est_doc = nlohmann::json::parse(slurp(est_out));
  CHECK(est_doc["method"] == "rept");
  CHECK(est_doc["per_processor"].size() == 4);

  auto masc = run_cli("estimate --method mascot --m 4 --c 2 --seed 9 --input " +
                      graph.string() + " --out " + est_out.string());
  CHECK(masc.exit_code == 0);
  CHECK(nlohmann::json::parse(slurp(est_out))["method"] == "mascot");
}

TEST_CASE("estimate output is identical across runs and thread counts") {
  TempDir tmp;
  fs::path graph = tmp.path / "g.txt";
  REQUIRE(run_cli("gen --model ba --nodes 200 --param 3 --seed 2 --out " +
                  graph.string())
              .exit_code == 0);
  fs::path a = tmp.path / "a.json";
  fs::path b = tmp.path / "b.json";
  std::string common =
      "estimate --method rept --m 3 --c 7 --seed 11 --input " + graph.string();
  REQUIRE(run_cli(common + " --threads 1 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli(common + " --threads 4 --out " + b.string()).exit_code == 0);
  auto da = nlohmann::json::parse(slurp(a));
  auto db = nlohmann::json::parse(slurp(b));
  da.erase("elapsed_seconds");
  db.erase("elapsed_seconds");
  CHECK(da == db);
}

TEST_CASE("eval emits the csv header") {
  TempDir tmp;
  fs::path graph = tmp.path / "g.txt";
  REQUIRE(run_cli("gen --model er --nodes 30 --param 0.3 --seed 4 --out " +
                  graph.string())
              .exit_code == 0);
  fs::path out = tmp.path / "eval.csv";
  auto eval = run_cli("eval --method rept --m 2 --c 2 --runs 20 --seed 1 --input " +
                      graph.string() + " --out " + out.string());
  CHECK(eval.exit_code == 0);
  std::string csv = slurp(out);
  CHECK(csv.rfind("method,m,c,runs,nrmse_global,", 0) == 0);
  CHECK(csv.find("rept,2,2,20,") != std::string::npos);
}

TEST_CASE("failure modes use distinct exit codes") {
  TempDir tmp;
  // unknown subcommand / bad flags: usage error
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("estimate --method rept --m 1 --c 1 --input nope.txt").exit_code == 2);
  // missing input file
  CHECK(run_cli("exact --input " + (tmp.path / "missing.txt").string()).exit_code == 2);
  // malformed edge list
  fs::path bad = tmp.path / "bad.txt";
  std::ofstream(bad) << "1 2\n3\n";
  auto r = run_cli("exact --input " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
}

TEST_CASE("gen rejects invalid model parameters") {
  TempDir tmp;
  fs::path out = tmp.path / "g.txt";
  CHECK(run_cli("gen --model er --nodes 10 --param 1.5 --out " + out.string())
            .exit_code == 2);
  CHECK(run_cli("gen --model ba --nodes 3 --param 5 --out " + out.string())
            .exit_code == 2);
  CHECK(run_cli("gen --model quux --nodes 10 --param 1 --out " + out.string())
            .exit_code == 2);
}
