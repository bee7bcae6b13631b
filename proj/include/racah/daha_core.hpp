#pragma once

// The universal additive DAHA of type (C1v, C1): generators t0..t3 with
// t0+t1+t2+t3 = -1 and every ti^2 central. Includes the Klein-four twist
// action on representations and the pullback to the Racah algebra.

#include "racah/racah_core.hpp"

#include <array>

namespace racah {

struct DahaRep {
  Eigen::Index dim = 0;
  MatQ t0, t1, t2, t3;
  std::optional<ModuleSpec> meta;

  const MatQ& t(int i) const {
    switch (i) {
      case 0: return t0;
      case 1: return t1;
      case 2: return t2;
      default: return t3;
    }
  }
};

struct DahaCheck {
  bool ok = true;
  std::vector<std::string> failures;
  // Present when every ti^2 is a scalar matrix: (t0^2, t1^2, t2^2, t3^2).
  std::optional<std::array<Rat, 4>> central_scalars;
};

// Checks sum ti = -I and [ti^2, tj] = 0 for all i, j.
DahaCheck verify_daha_relations(const DahaRep& rep);

// Permutes the generator matrices by the Klein-four action:
// (1,-1) swaps t0<->t1, t2<->t3; (-1,1) swaps t0<->t2, t1<->t3;
// (-1,-1) swaps t0<->t3, t1<->t2.
DahaRep twist(const DahaRep& rep, const Twist& eps);

// Views the DAHA representation as a Racah representation:
// A = ((t0+t1)^2 - I)/4, B = ((t0+t2)^2 - I)/4, C = ((t0+t3)^2 - I)/4,
// D = [A,B]/2. Asserts the image-of-delta identity
// A+B+C = (sum ti^2)/4 - t0/2 - 3I/4 and the Racah relations; throws on
// either failure.
RacahRep zeta_pullback(const DahaRep& rep);

}  // namespace racah
