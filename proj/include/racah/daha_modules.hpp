#pragma once

// The E_d (even-dimensional, d odd) and O_d (odd-dimensional, d even)
// families of DAHA modules: construction in the defining basis,
// irreducibility criteria, trace/scalar classification, diagonalizability
// criteria for the generator sums t0+tk, special bases, and predicted
// composition factors of the pulled-back Racah module.

#include "racah/daha_core.hpp"
#include "racah/racah_modules.hpp"

namespace racah {

struct DerivedParams {
  Rat sigma, tau;                         // both families
  std::optional<Rat> lambda, mu, nu;      // family O only
};

DerivedParams derived_params(const ModuleSpec& spec);

// Defining-basis construction; verifies the DAHA relations and the central
// scalars as a postcondition (throws on failure).
DahaRep build_E(int d, const Rat& a, const Rat& b, const Rat& c);
DahaRep build_O(int d, const Rat& a, const Rat& b, const Rat& c);

DahaRep build_H(const ModuleSpec& spec);  // build + twist per spec

// Expected central scalars (t0^2, t1^2, t2^2, t3^2) on the untwisted module.
std::array<Rat, 4> central_scalars_H(const ModuleSpec& spec);

// Family E: a+b+c, -a+b+c, a-b+c, a+b-c avoid {(d-1)/2 - i : i=0,2,...,d-1}.
// Family O: a+b+c, a-b-c, -a+b-c, -a-b+c avoid {(d+1)/2 - i : i=2,4,...,d}.
bool irr_criterion_H(const ModuleSpec& spec);

// Recovers the catalog spec of an irreducible representation from traces and
// central scalars. Even dim: finds the twist with trace(t0) = -(d+1), then
// reads |a|,|b|,|c| from the central scalars. Odd dim: a,b,c are the traces
// of t0+ti+1/2. Throws std::domain_error when the representation is
// reducible, no twist matches, or a scalar has no rational square root.
ModuleSpec classify_H(const DahaRep& rep);

enum class GenPair { T01, T02, T03 };

// Diagonalizability (equivalently multiplicity-freeness) of t0+tk on an
// irreducible module: 2a (resp. 2b, 2c) avoids {d-1, d-3, ..., 1-d}.
bool pm_diag_criterion(GenPair pair, const ModuleSpec& spec);

// Basis w_i with (t0+tk + (-1)^i (d/2 - p - i) + 1/2) w_i = w_{i+1}
// (annihilated at i = d), where p is a, b or c per the pair. Pair T01 uses
// the defining basis; T02/T03 build the basis by forward substitution from a
// cyclic vector.
BasisWitness special_basis_witness(GenPair pair, const ModuleSpec& spec);

struct FactorPrediction {
  std::vector<ModuleSpec> factors;  // family R, with dims d+1 each
  enum class Completeness { exact, classes_only } completeness =
      Completeness::exact;
};

// Parameter substitutions for the composition factors of the pulled-back
// Racah module, per family, twist and (for O) the boundary case
// a+b+c = (d+1)/2 whose listed classes do not account for all multiplicities.
FactorPrediction predicted_factors(const ModuleSpec& spec);

// Multiplicity-freeness of the chosen Racah generator on all composition
// factors, as a closed-form condition on 2a/2b/2c and a step-2 integer set
// depending on family, twist and letter.
bool factor_mf_criterion(Letter letter, const ModuleSpec& spec);

}  // namespace racah
