#include "racah/racah_core.hpp"

#include <stdexcept>

namespace racah {

namespace {

void check_dims(const RacahRep& rep) {
  for (const MatQ* m : {&rep.A, &rep.B, &rep.C, &rep.D}) {
    if (m->rows() != rep.dim || m->cols() != rep.dim)
      throw std::invalid_argument("RacahRep: matrix size mismatch");
  }
}

}  // namespace

MatQ central_alpha(const RacahRep& rep) {
  return commutator(rep.A, rep.D) + rep.A * rep.C - rep.B * rep.A;
}

MatQ central_beta(const RacahRep& rep) {
  return commutator(rep.B, rep.D) + rep.B * rep.A - rep.C * rep.B;
}

MatQ central_gamma(const RacahRep& rep) {
  return commutator(rep.C, rep.D) + rep.C * rep.B - rep.A * rep.C;
}

RelationCheck verify_racah_relations(const RacahRep& rep) {
  check_dims(rep);
  RelationCheck out;
  auto fail = [&](const std::string& id) {
    out.ok = false;
    out.failures.push_back(id);
  };
  MatQ twoD = rep.D * Rat(2);
  if (!mat_eq(commutator(rep.A, rep.B), twoD)) fail("AB=2D");
  if (!mat_eq(commutator(rep.B, rep.C), twoD)) fail("BC=2D");
  if (!mat_eq(commutator(rep.C, rep.A), twoD)) fail("CA=2D");

  const MatQ centrals[3] = {central_alpha(rep), central_beta(rep), central_gamma(rep)};
  const char* cnames[3] = {"alpha", "beta", "gamma"};
  const MatQ* gens[4] = {&rep.A, &rep.B, &rep.C, &rep.D};
  const char* gnames[4] = {"A", "B", "C", "D"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(commutator(centrals[i], *gens[j])))
        fail(std::string(cnames[i]) + "-central-" + gnames[j]);
  return out;
}

CentralData central_data(const RacahRep& rep) {
  check_dims(rep);
  CentralData cd;
  cd.alpha = central_alpha(rep);
  cd.beta = central_beta(rep);
  cd.gamma = central_gamma(rep);
  cd.delta = rep.A + rep.B + rep.C;

  const MatQ &A = rep.A, &B = rep.B, &C = rep.C;
  const MatQ& dl = cd.delta;
  auto require = [&](const MatQ& lhs, const MatQ& rhs, const char* id) {
    if (!mat_eq(lhs, rhs))
      throw std::domain_error(std::string("not a Racah representation: ") + id);
  };
  // Six identities eliminating C, D from the definitions of alpha, beta,
  // gamma (and cyclic variants).
  require(A * A * B - A * B * A * 2 + B * A * A - A * B * 2 - B * A * 2,
          A * A * 2 - A * dl * 2 + cd.alpha * 2, "sixterm-AB");
  require(A * B * B - B * A * B * 2 + B * B * A - A * B * 2 - B * A * 2,
          B * B * 2 - B * dl * 2 - cd.beta * 2, "sixterm-BA");
  require(A * A * C - A * C * A * 2 + C * A * A - A * C * 2 - C * A * 2,
          A * A * 2 - A * dl * 2 - cd.alpha * 2, "sixterm-AC");
  require(C * C * A - C * A * C * 2 + A * C * C - A * C * 2 - C * A * 2,
          C * C * 2 - C * dl * 2 + cd.gamma * 2, "sixterm-CA");
  require(B * B * C - B * C * B * 2 + C * B * B - B * C * 2 - C * B * 2,
          B * B * 2 - B * dl * 2 + cd.beta * 2, "sixterm-BC");
  require(C * C * B - C * B * C * 2 + B * C * C - B * C * 2 - C * B * 2,
          C * C * 2 - C * dl * 2 - cd.gamma * 2, "sixterm-CB");

  Rat s;
  if (is_scalar_matrix(cd.alpha, &s)) cd.alpha_scalar = s;
  if (is_scalar_matrix(cd.beta, &s)) cd.beta_scalar = s;
  if (is_scalar_matrix(cd.gamma, &s)) cd.gamma_scalar = s;
  if (is_scalar_matrix(cd.delta, &s)) cd.delta_scalar = s;
  return cd;
}

}  // namespace racah
