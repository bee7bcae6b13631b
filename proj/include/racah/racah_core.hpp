#pragma once

// The universal Racah algebra as a relation-checking oracle on concrete
// representations: generators A, B, C, D with [A,B] = [B,C] = [C,A] = 2D,
// the central combinations alpha, beta, gamma, and delta = A + B + C.

#include "racah/linalg.hpp"
#include "racah/module_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace racah {

struct RacahRep {
  Eigen::Index dim = 0;
  MatQ A, B, C, D;
  std::optional<ModuleSpec> meta;
};

struct RelationCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks [A,B]=2D, [B,C]=2D, [C,A]=2D and that alpha, beta, gamma commute
// with A, B, C, D. Failure identifiers are stable strings ("AB=2D",
// "alpha-central-A", ...).
RelationCheck verify_racah_relations(const RacahRep& rep);

struct CentralData {
  MatQ alpha, beta, gamma, delta;
  std::optional<Rat> alpha_scalar, beta_scalar, gamma_scalar, delta_scalar;
};

MatQ central_alpha(const RacahRep& rep);
MatQ central_beta(const RacahRep& rep);
MatQ central_gamma(const RacahRep& rep);

// Computes alpha, beta, gamma, delta and asserts the six degree-3 identities
// relating them to A, B, C and delta (exact matrix identities). Throws
// std::domain_error naming the failed identity when the input is not an
// honest representation.
CentralData central_data(const RacahRep& rep);

}  // namespace racah
