#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/daha_modules.hpp"
#include "racah/racah_modules.hpp"
#include "racah/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace racah;

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "racah_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  std::string cmd = std::string(RACAH_CLI_PATH) + " " + args + " > " +
                    (work_dir() / "stdout.txt").string() + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  return std::string(std::istreambuf_iterator<char>(is), {});
}

}  // namespace

TEST_CASE("construct writes the expected matrices") {
  fs::path out = work_dir() / "r1.json";
  REQUIRE(run("construct --family R --d 1 --a 0 --b 0 --c 0 --out " + out.string()) == 0);
  Json j = Json::parse(slurp(out));
  CHECK(j.at("kind") == "racah");
  CHECK(j.at("convention") == "column-action");
  CHECK(j.at("matrices").at("A")[1][0] == "1");

  fs::path o0 = work_dir() / "o0.json";
  REQUIRE(run("construct --family O --d 0 --a 1 --b 1 --c 1 --out " + o0.string()) == 0);
  Json jo = Json::parse(slurp(o0));
  CHECK(jo.at("matrices").at("t0")[0][0] == "5/4");
}

TEST_CASE("construct round-trips exactly") {
  fs::path out = work_dir() / "e3.json";
  REQUIRE(run("construct --family E --d 3 --a 1 --b 5 --c 1/4 --out " +
              out.string()) == 0);
  DahaRep disk = daha_from(read_repfile(out.string()));
  DahaRep mem = build_E(3, 1, 5, rat(1, 4));
  for (int i = 0; i < 4; ++i) CHECK(mat_eq(disk.t(i), mem.t(i)));
}

TEST_CASE("construct rejects bad input with usage exit code") {
  CHECK(run("construct --family E --d 2 --a 0 --b 0 --c 0 --out " +
            (work_dir() / "x.json").string()) == 2);  // parity
  CHECK(run("construct --family R --d 1 --a zz --b 0 --c 0 --out " +
            (work_dir() / "x.json").string()) == 2);  // malformed rational
  CHECK(run("construct --family R --d 1 --a 0 --b 0 --c 0 --out /nonexistent/dir/x.json") == 2);
}

TEST_CASE("verify suites on a twisted module") {
  fs::path out = work_dir() / "e3t.json";
  REQUIRE(run("construct --family E --d 3 --a 1 --b 5 --c 1/4 --twist=-1,1 --out " +
              out.string()) == 0);
  for (const char* suite :
       {"relations", "central", "criteria", "comp-series", "leonard", "equivalences"})
    CHECK(run("verify --in " + out.string() + " --suite " + std::string(suite)) == 0);
  CHECK(run("verify --in " + out.string() + " --suite comp-series --expect-factors") == 0);
}

TEST_CASE("verify fails on a tampered file") {
  fs::path out = work_dir() / "bad.json";
  REQUIRE(run("construct --family E --d 1 --a 1 --b 0 --c 1/4 --out " + out.string()) == 0);
  Json j = Json::parse(slurp(out));
  j["matrices"]["t0"][0][0] = "7";
  std::ofstream(out) << j.dump(2);
  CHECK(run("verify --in " + out.string() + " --suite relations") == 1);
  std::string log = slurp(work_dir() / "stdout.txt");
  CHECK(log.find("sum=-1") != std::string::npos);
}

TEST_CASE("verify usage errors") {
  fs::path out = work_dir() / "r1b.json";
  REQUIRE(run("construct --family R --d 1 --a 0 --b 0 --c 0 --out " + out.string()) == 0);
  CHECK(run("verify --in " + out.string() + " --suite nosuch") == 2);
  CHECK(run("verify --in " + (work_dir() / "missing.json").string() +
            " --suite relations") == 2);
}

TEST_CASE("sweep produces a deterministic report") {
  fs::path grid = work_dir() / "grid.json";
  std::ofstream(grid) << R"({"values": ["0", "1/2", "1"]})";
  fs::path rep1 = work_dir() / "rep1.json";
  fs::path rep8 = work_dir() / "rep8.json";
  REQUIRE(run("sweep --families R,E,O --d-max 2 --grid " + grid.string() +
              " --report " + rep1.string() + " --jobs 1") == 0);
  REQUIRE(run("sweep --families R,E,O --d-max 2 --grid " + grid.string() +
              " --report " + rep8.string() + " --jobs 8") == 0);
  CHECK(slurp(rep1) == slurp(rep8));  // byte-identical regardless of job count
  Json j = Json::parse(slurp(rep1));
  CHECK(j.at("summary").at("failed") == 0);
  CHECK(j.at("summary").at("inconclusive") == 0);
  CHECK(j.at("summary").at("checked").get<int>() > 0);
}

TEST_CASE("sweep records clause outcomes for a named spec") {
  fs::path grid = work_dir() / "grid1.json";
  std::ofstream(grid) << R"({"triples": [["1", "5", "1/4"]]})";
  fs::path rep = work_dir() / "rep_named.json";
  REQUIRE(run("sweep --families E --d-max 3 --grid " + grid.string() + " --report " +
              rep.string()) == 0);
  Json j = Json::parse(slurp(rep));
  bool found = false;
  for (const Json& rec : j.at("records")) {
    const Json& spec = rec.at("spec");
    if (spec.at("d") == 3 && spec.at("twist")[0] == 1 && spec.at("twist")[1] == 1) {
      found = true;
      const Json& lA = rec.at("detail").at("letters")[0];
      CHECK(lA.at("diag_on_module") == false);
      CHECK(lA.at("mf_on_factors") == false);
      CHECK(rec.at("ok") == true);
    }
  }
  CHECK(found);
}
