#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/daha_modules.hpp"
#include "racah/racah_modules.hpp"
#include "racah/serialize.hpp"

#include <cstdio>
#include <filesystem>

using namespace racah;

TEST_CASE("racah rep round-trip") {
  RacahRep rep = build_R(2, rat(1, 2), Rat(-1), rat(5, 2));
  RepFile f = to_repfile(rep);
  CHECK(f.kind == "racah");
  CHECK(f.dim == 3);
  Json j = repfile_to_json(f);
  CHECK(j.at("convention") == "column-action");
  RepFile back = repfile_from_json(j);
  RacahRep rep2 = racah_from(back);
  CHECK(mat_eq(rep.A, rep2.A));
  CHECK(mat_eq(rep.B, rep2.B));
  CHECK(mat_eq(rep.C, rep2.C));
  CHECK(mat_eq(rep.D, rep2.D));
  REQUIRE(rep2.meta.has_value());
  CHECK(rep2.meta->a == rat(1, 2));
}

TEST_CASE("daha rep round-trip through a file") {
  DahaRep rep = build_E(3, 1, 5, rat(1, 4));
  std::string path =
      (std::filesystem::temp_directory_path() / "serialize_roundtrip.json").string();
  write_repfile(path, to_repfile(rep));
  DahaRep back = daha_from(read_repfile(path));
  for (int i = 0; i < 4; ++i) CHECK(mat_eq(rep.t(i), back.t(i)));
  std::remove(path.c_str());
}

TEST_CASE("serialized rationals are exact strings") {
  RepFile f = to_repfile(build_R(1, 0, 0, 0));
  Json j = repfile_to_json(f);
  CHECK(j.at("matrices").at("A")[0][0] == "3/4");
  CHECK(j.at("matrices").at("A")[1][0] == "1");
  CHECK(j.at("matrices").at("B")[0][1] == "-3/4");
}

TEST_CASE("kind mismatch is rejected") {
  RepFile f = to_repfile(build_R(1, 0, 0, 0));
  CHECK_THROWS_AS(daha_from(f), std::invalid_argument);
  RepFile g = to_repfile(build_E(1, 0, 0, 0));
  CHECK_THROWS_AS(racah_from(g), std::invalid_argument);
}

TEST_CASE("schema validation") {
  Json j = repfile_to_json(to_repfile(build_R(1, 0, 0, 0)));
  Json missing = j;
  missing.erase("convention");
  CHECK_THROWS(repfile_from_json(missing));
  Json badrat = j;
  badrat["matrices"]["A"][0][0] = "0.75";
  CHECK_THROWS_AS(repfile_from_json(badrat), std::invalid_argument);
  Json badsize = j;
  badsize["matrices"]["A"][0].erase(1);
  CHECK_THROWS_AS(repfile_from_json(badsize), std::invalid_argument);
}

TEST_CASE("spec json round-trip") {
  ModuleSpec spec(Family::E, 3, Rat(1), Rat(5), rat(1, 4), {-1, 1});
  ModuleSpec back = spec_from_json(spec_to_json(spec));
  CHECK(back.family == Family::E);
  CHECK(back.d == 3);
  CHECK(back.a == 1);
  CHECK(back.b == 5);
  CHECK(back.c == rat(1, 4));
  CHECK(back.twist == Twist{-1, 1});

  ModuleSpec r(Family::R, 2, rat(-1, 2), Rat(0), rat(5, 2));
  ModuleSpec rback = spec_from_json(spec_to_json(r));
  CHECK(rback.family == Family::R);
  CHECK(rback.a == rat(-1, 2));
}

TEST_CASE("missing file raises an I/O error") {
  CHECK_THROWS_AS(read_repfile("/nonexistent/path/rep.json"), std::runtime_error);
}
