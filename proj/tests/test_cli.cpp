#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "planepairs/report.hpp"

using namespace planepairs;
using nlohmann::json;

namespace {

std::string g_cli; // path to the built binary, from argv

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null >/dev/null";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

json sans_volatile(const std::filesystem::path& p) {
  json j = json::parse(slurp(p));
  j.erase("volatile");
  return j;
}

} // namespace

TEST_CASE("suite runner: records, filtering and failure reporting") {
  SuiteOptions opt;
  Report r = run_suites({"cones"}, opt);
  CHECK(r.all_pass());
  CHECK(r.records.size() == 12);
  CHECK(r.records[0].id == "cones/H1/n4");

  opt.only = "2plane";
  Report f = run_suites({"cones"}, opt);
  CHECK(f.records.size() == 4);
  for (auto& rec : f.records)
    CHECK(rec.id.find("2plane") != std::string::npos);

  CHECK_THROWS(run_suites({"nosuch"}, SuiteOptions{}));

  // An empty report does not count as passing.
  opt.only = "matches-nothing";
  CHECK_FALSE(run_suites({"cones"}, opt).all_pass());
}

TEST_CASE("a corrupted deformation fixture yields a failing record") {
  SuiteOptions opt;
  opt.mutate = true;
  Report r = run_suites({"deform"}, opt);
  CHECK_FALSE(r.all_pass());
  int failing = 0;
  for (auto& rec : r.records)
    if (!rec.pass) {
      ++failing;
      CHECK(rec.id == "deform/i124/flatness");
    }
  CHECK(failing == 1);
  CHECK(r.summary().find("FAIL  deform/i124/flatness") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic and schema-stable") {
  SuiteOptions a;
  a.jobs = 1;
  SuiteOptions b;
  b.jobs = 4;
  std::string ja = run_suites({"cones", "borel"}, a).to_json();
  std::string jb = run_suites({"cones", "borel"}, b).to_json();
  json pa = json::parse(ja), pb = json::parse(jb);
  CHECK(pa.contains("volatile"));
  CHECK(pa["volatile"].contains("timestamp"));
  pa.erase("volatile");
  pb.erase("volatile");
  CHECK(pa.dump() == pb.dump());
  CHECK(pa["schema_version"] == 1);
  CHECK(pa["seed"] == 42);
  CHECK(pa["summary"]["failed"] == 0);
  CHECK(pa["summary"]["total"] == pa["records"].size());
  for (auto& rec : pa["records"]) {
    CHECK(rec.contains("id"));
    CHECK(rec.contains("claim"));
    CHECK(rec.contains("expected"));
    CHECK(rec.contains("computed"));
    CHECK(rec["pass"] == true);
  }
}

TEST_CASE("the binary: exit codes, determinism, and the seed environment") {
  REQUIRE_FALSE(g_cli.empty());
  auto f1 = tmp("pp_cli_1.json"), f2 = tmp("pp_cli_2.json");

  CHECK(run_cli("cones --seed 42 --out " + f1.string()) == 0);
  CHECK(run_cli("cones --seed 42 --out " + f2.string()) == 0);
  // Identical runs differ at most inside the volatile object.
  CHECK(sans_volatile(f1).dump() == sans_volatile(f2).dump());

  CHECK(run_cli("deform --mutate --out " + f1.string()) == 1);
  json m = json::parse(slurp(f1));
  CHECK(m["summary"]["failed"] == 1);

  CHECK(run_cli("catalog --family 2borel --n 5 --out " + f1.string()) == 0);
  CHECK(json::parse(slurp(f1))["records"].size() == 2);

  // --case filters by id substring.
  CHECK(run_cli("tangent --case transverse --out " + f1.string()) == 0);
  CHECK(json::parse(slurp(f1))["records"].size() == 1);

  // The seed comes from PLANEPAIRS_SEED when no flag is given.
  CHECK(std::system(("PLANEPAIRS_SEED=7 " + g_cli + " cones --out " +
                     f1.string() + " 2>/dev/null >/dev/null")
                        .c_str()) == 0);
  CHECK(json::parse(slurp(f1))["seed"] == 7);

  CHECK(run_cli("nosuch-subcommand") != 0);
  std::filesystem::remove(f1);
  std::filesystem::remove(f2);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  std::vector<char*> args;
  for (int i = 0; i < argc; ++i) {
    if (i == 1 && argv[i][0] != '-')
      g_cli = argv[i];
    else
      args.push_back(argv[i]);
  }
  ctx.applyCommandLine((int)args.size(), args.data());
  return ctx.run();
}
