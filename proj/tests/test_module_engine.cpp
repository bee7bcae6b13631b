#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/daha_modules.hpp"
#include "racah/module_engine.hpp"
#include "racah/racah_modules.hpp"

#include <random>
#include <set>

using namespace racah;

namespace {

VecQ unit(Eigen::Index n, Eigen::Index i) {
  VecQ v = VecQ::Zero(n);
  v(i) = 1;
  return v;
}

}  // namespace

TEST_CASE("spin closure on the smallest reducible module") {
  GeneratorSet gens = daha_generators(build_E(1, 0, 0, 0));
  SubspaceBasis line = spin({unit(2, 1)}, gens);
  CHECK(line.dim() == 1);  // v1 spans an invariant line
  CHECK(spin({unit(2, 0)}, gens).dim() == 2);  // t1 v0 = v1
  CHECK(spin({VecQ(VecQ::Zero(2))}, gens).dim() == 0);
}

TEST_CASE("spin is a closure operator") {
  GeneratorSet gens = racah_generators(build_R(3, rat(1, 2), Rat(-1), rat(5, 2)));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int trial = 0; trial < 4; ++trial) {
    VecQ v(4);
    for (int i = 0; i < 4; ++i) v(i) = Rat(coin(rng));
    SubspaceBasis s = spin({v}, gens);
    CHECK(s.contains(v));                              // extensive
    if (s.dim() > 0) {
      SubspaceBasis again = spin(s.vectors, gens);
      CHECK(again == s);                               // idempotent
    }
  }
}

TEST_CASE("minimal submodules") {
  MinimalSubmodules ms =
      minimal_submodules(daha_generators(build_E(1, 0, 0, 0)), "t0");
  CHECK(ms.soundness == MinimalSubmodules::Soundness::complete);
  REQUIRE(ms.submodules.size() == 1);
  CHECK(ms.submodules[0].dim() == 1);
  CHECK(ms.submodules[0].contains(unit(2, 1)));

  MinimalSubmodules irr =
      minimal_submodules(racah_generators(build_R(1, 0, 0, 0)), "A");
  CHECK(irr.submodules.empty());
  CHECK(irr.soundness == MinimalSubmodules::Soundness::complete);

  MinimalSubmodules one =
      minimal_submodules(racah_generators(build_R(0, Rat(1), Rat(2), Rat(3))), "A");
  CHECK(one.submodules.empty());
}

TEST_CASE("brute irreducibility agrees with the closed-form criteria") {
  CHECK(brute_irreducible(daha_generators(build_E(3, 1, 5, rat(1, 4)))));
  CHECK_FALSE(brute_irreducible(daha_generators(build_E(1, 0, 0, 0))));
  CHECK_FALSE(brute_irreducible(racah_generators(build_R(2, 0, 0, -1))));
  CHECK(brute_irreducible(racah_generators(build_R(2, rat(1, 2), Rat(-1), rat(5, 2)))));
}

TEST_CASE("composition series dimensions and fingerprints") {
  RacahRep pulled = zeta_pullback(build_E(3, 1, 5, rat(1, 4)));
  auto factors = composition_series(racah_generators(pulled));
  REQUIRE(factors.size() == 2);
  std::multiset<Eigen::Index> dims;
  for (const auto& f : factors) dims.insert(f.factor_gens.dim);
  CHECK(dims == std::multiset<Eigen::Index>{1, 3});
  Eigen::Index total = 0;
  for (const auto& f : factors) {
    total += f.factor_gens.dim;
    CHECK(brute_irreducible(f.factor_gens));  // factors are irreducible
  }
  CHECK(total == pulled.dim);

  RacahRep small = zeta_pullback(build_O(0, 1, 1, 1));
  CHECK(composition_series(racah_generators(small)).size() == 1);

  RacahRep twisted = zeta_pullback(twist(build_E(3, 1, 5, rat(1, 4)), {1, -1}));
  auto tf = composition_series(racah_generators(twisted));
  REQUIRE(tf.size() == 2);
  CHECK(tf[0].factor_gens.dim == 2);
  CHECK(tf[1].factor_gens.dim == 2);
}

TEST_CASE("fingerprint matching") {
  RacahRep pulled = zeta_pullback(build_E(1, 1, 5, rat(1, 4)));
  auto factors = composition_series(racah_generators(pulled));
  REQUIRE(factors.size() == 1);
  CHECK(fingerprint_match(factors[0].fingerprint,
                          {Family::R, 1, Rat(-1), Rat(-3), rat(-5, 8)}));
  // R_1(0,...) is fingerprint-identical (reversed eigenvalue list); a shifted
  // parameter with a genuinely different spectrum must be rejected.
  CHECK(fingerprint_match(factors[0].fingerprint,
                          {Family::R, 1, Rat(0), Rat(-3), rat(-5, 8)}));
  CHECK_FALSE(fingerprint_match(factors[0].fingerprint,
                                {Family::R, 1, Rat(1), Rat(-3), rat(-5, 8)}));

  // one-dimensional: only the delta scalar and spectra singletons matter
  RacahRep tiny = build_R(0, Rat(0), Rat(0), Rat(0));
  auto tf = composition_series(racah_generators(tiny));
  CHECK(fingerprint_match(tf[0].fingerprint, {Family::R, 0, Rat(0), Rat(0), Rat(0)}));
  CHECK_FALSE(fingerprint_match(tf[0].fingerprint, {Family::R, 0, Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("leonard pair detection") {
  RacahRep rep = build_R(1, 0, 0, 0);
  CHECK(leonard_pair_check(rep.A, rep.B).verdict);
  CHECK_FALSE(leonard_pair_check(identity(2), rep.B).verdict);
  CHECK(leonard_pair_check(MatQ::Zero(1, 1), MatQ::Zero(1, 1)).verdict);

  LeonardReport lr = leonard_pair_check(rep.A, rep.B);
  REQUIRE(lr.orderings.size() == 2);
  CHECK(lr.orderings[0].size() == 2);  // witness eigenvalue ordering

  // non-multiplicity-free first operator
  RacahRep bad = build_R(1, rat(-1, 2), 0, 0);
  LeonardReport lb = leonard_pair_check(bad.A, bad.B);
  CHECK_FALSE(lb.verdict);
  CHECK_FALSE(lb.multiplicity_free[0]);
}

TEST_CASE("leonard triple detection") {
  RacahRep rep = build_R(1, 0, 0, 0);
  CHECK(leonard_triple_check(rep.A, rep.B, rep.C).verdict);
  RacahRep bad = build_R(1, rat(-1, 2), 0, 0);
  CHECK_FALSE(leonard_triple_check(bad.A, bad.B, bad.C).verdict);
  CHECK(leonard_triple_check(MatQ::Zero(1, 1), MatQ::Zero(1, 1), MatQ::Zero(1, 1))
            .verdict);
}

TEST_CASE("leonard equivalence on irreducible modules") {
  std::vector<Rat> vals = {Rat(0), rat(1, 4), rat(-1, 2), Rat(1)};
  for (const Rat& a : vals)
    for (const Rat& b : vals) {
      ModuleSpec spec(Family::R, 2, a, b, rat(5, 2));
      if (!irr_criterion_R(spec)) continue;
      RacahRep rep = build_R(2, a, b, rat(5, 2));
      bool mfA = diagonalizability(rep.A).multiplicity_free;
      bool mfB = diagonalizability(rep.B).multiplicity_free;
      CHECK(leonard_pair_check(rep.A, rep.B).verdict == (mfA && mfB));
    }
}

TEST_CASE("equivalence harness accepts and reports") {
  EquivalenceReport er =
      verify_equivalences({Family::E, 3, Rat(1), Rat(5), rat(1, 4)});
  CHECK(er.ok);
  CHECK(er.violations.empty());
  CHECK_FALSE(er.letters[0].diag_on_module);  // 2a = 2 hits the criterion set
  CHECK_FALSE(er.letters[0].mf_on_factors);
  CHECK_FALSE(er.letters[0].criterion);
  CHECK(er.factors_match_prediction);
  CHECK(er.prediction_completeness == "exact");
  CHECK(er.factor_dims == std::vector<Eigen::Index>{1, 3});

  EquivalenceReport tiny = verify_equivalences({Family::O, 0, Rat(1), Rat(1), Rat(1)});
  CHECK(tiny.ok);
  CHECK(tiny.letters[0].diag_on_module);
  CHECK(tiny.triple.leonard_triples);

  CHECK_THROWS_AS(verify_equivalences({Family::E, 1, Rat(0), Rat(0), Rat(0)}),
                  std::domain_error);  // reducible input is rejected
}

TEST_CASE("degenerate twisted boundary case is recognized") {
  EquivalenceReport er =
      verify_equivalences({Family::E, 1, Rat(0), Rat(0), rat(1, 4), {1, -1}});
  CHECK(er.ok);
  CHECK(er.letters[0].degenerate);
  CHECK_FALSE(er.letters[0].diag_on_module);   // nilpotent nonzero action
  CHECK(er.letters[0].diag_on_factors);        // both factors one-dimensional
  CHECK(er.letters[0].mf_on_factors);
  CHECK(er.letters[0].criterion);
  CHECK_FALSE(er.letters[1].degenerate);
}

TEST_CASE("generator lookup") {
  GeneratorSet gens = racah_generators(build_R(1, 0, 0, 0));
  CHECK(gens.by_name("A")(1, 0) == 1);
  CHECK_THROWS_AS(gens.by_name("t0"), std::invalid_argument);
}
