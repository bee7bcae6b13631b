#pragma once

// Representation-agnostic module theory over the rationals: invariant
// subspace spinning, minimal submodules (with a one-parameter exact search
// through two-dimensional eigenspaces), composition series with induced
// quotient actions, brute-force irreducibility, factor fingerprints, and
// Leonard pair/triple detection.

#include "racah/daha_core.hpp"
#include "racah/module_spec.hpp"
#include "racah/racah_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace racah {

struct GeneratorSet {
  Eigen::Index dim = 0;
  std::vector<std::pair<std::string, MatQ>> generators;

  const MatQ& by_name(const std::string& name) const;
};

// A, B, C of a Racah representation (D is determined by [A,B]/2 and adds
// nothing to invariance).
GeneratorSet racah_generators(const RacahRep& rep);
GeneratorSet daha_generators(const DahaRep& rep);

// Smallest invariant subspace containing the seed vectors.
SubspaceBasis spin(const std::vector<VecQ>& seed, const GeneratorSet& gens);

struct MinimalSubmodules {
  std::vector<SubspaceBasis> submodules;  // inclusion-minimal, proper, nonzero
  enum class Soundness { complete, sound_only } soundness = Soundness::complete;
  // Nonconstant part of the rank-drop determinant that rational-root
  // verification could not explain away; its roots (over the algebraic
  // closure) mark parameters of the eigenvector family whose spin is proper.
  std::optional<PolyQ> locus;
};

// Eigenvector-driven minimal submodule search through the named pivot
// generator. Throws std::domain_error when the pivot spectrum does not
// split over the rationals.
MinimalSubmodules minimal_submodules(const GeneratorSet& gens,
                                     const std::string& pivot);

// True iff the search is complete, finds nothing, and the locus certifies
// no submodule over the algebraic closure either. Throws
// std::runtime_error("inconclusive") when only a sound-only search applies.
bool brute_irreducible(const GeneratorSet& gens);

struct FactorFingerprint {
  Eigen::Index dim = 0;
  Rat delta_scalar;
  std::map<Rat, int> specA, specB, specC;  // with algebraic multiplicity
  bool splits = true;                      // all three spectra rational
};

struct CompositionFactor {
  GeneratorSet factor_gens;
  FactorFingerprint fingerprint;
};

// Bottom-up composition factors of a Racah generator set (names A, B, C).
// delta is read off A+B+C on each factor and must be scalar.
std::vector<CompositionFactor> composition_series(const GeneratorSet& gens);

// Necessary-condition match of a factor fingerprint against a catalog
// R_d(a,b,c): dimension, delta scalar and the three closed-form spectra.
bool fingerprint_match(const FactorFingerprint& fp, const ModuleSpec& rspec);

struct LeonardReport {
  bool verdict = false;
  // Per-operator diagnostics in input order.
  std::vector<bool> multiplicity_free;
  std::vector<bool> splits;
  // Witnessing eigenvalue orderings (one per operator in the diagonal
  // role), empty when the path test fails for that role.
  std::vector<std::vector<Rat>> orderings;
};

LeonardReport leonard_pair_check(const MatQ& x, const MatQ& y);
LeonardReport leonard_triple_check(const MatQ& x, const MatQ& y, const MatQ& z);

struct EquivalenceReport {
  ModuleSpec spec;
  bool ok = true;
  std::vector<std::string> violations;

  // Clauses per letter (A, B, C): diagonalizable on V, diagonalizable on
  // all factors, multiplicity-free on all factors, closed-form factor
  // criterion.
  struct LetterClauses {
    bool diag_on_module = false;
    bool diag_on_factors = false;
    bool mf_on_factors = false;
    bool criterion = false;
    // Documented boundary case (twisted family-E modules with d <= 3 and the
    // distinguished parameter equal to zero) where the letter acts
    // non-diagonalizably on the module even though both one- or
    // two-dimensional factors are multiplicity-free; the factor-level clauses
    // are then strictly weaker than the module-level one.
    bool degenerate = false;
  };
  LetterClauses letters[3];

  struct PairClauses {
    bool diag_on_module = false;
    bool diag_on_factors = false;
    bool mf_on_factors = false;
    bool leonard_pairs = false;
  };
  PairClauses pairs[3];  // (A,B), (B,C), (C,A)

  struct TripleClauses {
    bool diag_on_module = false;
    bool diag_on_factors = false;
    bool mf_on_factors = false;
    bool leonard_triples = false;
  } triple;

  std::vector<Eigen::Index> factor_dims;
  bool factors_match_prediction = false;
  std::string prediction_completeness;
};

// Builds the (twisted) DAHA module, pulls back to the Racah algebra and
// checks the diagonalizability / multiplicity-freeness / Leonard
// equivalences letter-wise, pair-wise and for the triple, on the module and
// on every composition factor, cross-checked against the closed-form
// criteria and predicted factors.
EquivalenceReport verify_equivalences(const ModuleSpec& spec);

}  // namespace racah
