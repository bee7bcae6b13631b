#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/daha_core.hpp"
#include "racah/daha_modules.hpp"
#include "racah/racah_core.hpp"
#include "racah/racah_modules.hpp"

#include <algorithm>

using namespace racah;

TEST_CASE("relations hold on constructed modules") {
  CHECK(verify_racah_relations(build_R(1, 0, 0, 0)).ok);
  CHECK(verify_racah_relations(build_R(3, rat(1, 2), Rat(-1), rat(5, 2))).ok);
  CHECK(verify_racah_relations(zeta_pullback(build_E(3, 1, 5, rat(1, 4)))).ok);
}

TEST_CASE("perturbed D breaks exactly the bracket relations") {
  RacahRep rep = build_R(1, 0, 0, 0);
  rep.D += identity(2);
  RelationCheck rc = verify_racah_relations(rep);
  CHECK_FALSE(rc.ok);
  auto has = [&](const char* id) {
    return std::find(rc.failures.begin(), rc.failures.end(), id) != rc.failures.end();
  };
  CHECK(has("AB=2D"));
  CHECK(has("BC=2D"));
  CHECK(has("CA=2D"));
}

TEST_CASE("size mismatch is rejected") {
  RacahRep rep = build_R(1, 0, 0, 0);
  rep.D = identity(3);
  CHECK_THROWS_AS(verify_racah_relations(rep), std::invalid_argument);
}

TEST_CASE("central scalars at the zero parameter point") {
  CentralData cd = central_data(build_R(1, 0, 0, 0));
  REQUIRE(cd.alpha_scalar.has_value());
  REQUIRE(cd.beta_scalar.has_value());
  REQUIRE(cd.gamma_scalar.has_value());
  REQUIRE(cd.delta_scalar.has_value());
  CHECK(*cd.alpha_scalar == 0);
  CHECK(*cd.beta_scalar == 0);
  CHECK(*cd.gamma_scalar == 0);
  CHECK(*cd.delta_scalar == rat(3, 4));
  CHECK(is_zero(commutator(cd.alpha, build_R(1, 0, 0, 0).A)));
}

TEST_CASE("one-dimensional module: everything scalar") {
  CentralData cd = central_data(build_R(0, Rat(2), rat(-1, 2), rat(1, 3)));
  CHECK(cd.alpha_scalar.has_value());
  CHECK(cd.delta_scalar.has_value());
  CHECK(*cd.delta_scalar ==
        Rat(2) * Rat(3) + rat(-1, 2) * rat(1, 2) + rat(1, 3) * rat(4, 3));
}

TEST_CASE("delta vanishes on the pullback of the smallest even module") {
  CentralData cd = central_data(zeta_pullback(build_E(1, 0, 0, 0)));
  CHECK(is_zero(cd.delta));
}

TEST_CASE("delta scalar matches the closed form across parameters") {
  for (int d : {0, 1, 2, 4}) {
    Rat a = rat(1, 2), b = Rat(-1), c = rat(5, 2);
    CentralData cd = central_data(build_R(d, a, b, c));
    REQUIRE(cd.delta_scalar.has_value());
    Rat h = rat(d, 2);
    CHECK(*cd.delta_scalar == h * (h + 1) + a * (a + 1) + b * (b + 1) + c * (c + 1));
  }
}

TEST_CASE("tampered input fails the six-term identities") {
  RacahRep rep = build_R(2, 0, 0, 0);
  rep.C(0, 1) += 1;
  CHECK_THROWS_AS(central_data(rep), std::domain_error);
}
