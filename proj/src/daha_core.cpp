#include "racah/daha_core.hpp"

#include <stdexcept>

namespace racah {

namespace {

void check_dims(const DahaRep& rep) {
  for (int i = 0; i < 4; ++i)
    if (rep.t(i).rows() != rep.dim || rep.t(i).cols() != rep.dim)
      throw std::invalid_argument("DahaRep: matrix size mismatch");
}

}  // namespace

DahaCheck verify_daha_relations(const DahaRep& rep) {
  check_dims(rep);
  DahaCheck out;
  auto fail = [&](const std::string& id) {
    out.ok = false;
    out.failures.push_back(id);
  };
  MatQ sum = rep.t0 + rep.t1 + rep.t2 + rep.t3;
  if (!mat_eq(sum, identity(rep.dim) * Rat(-1))) fail("sum=-1");

  MatQ squares[4];
  for (int i = 0; i < 4; ++i) squares[i] = rep.t(i) * rep.t(i);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(commutator(squares[i], rep.t(j))))
        fail("t" + std::to_string(i) + "^2-central-t" + std::to_string(j));

  std::array<Rat, 4> scalars;
  bool all_scalar = true;
  for (int i = 0; i < 4; ++i)
    all_scalar = all_scalar && is_scalar_matrix(squares[i], &scalars[i]);
  if (all_scalar) out.central_scalars = scalars;
  return out;
}

DahaRep twist(const DahaRep& rep, const Twist& eps) {
  DahaRep out = rep;
  if (eps.s1 == 1 && eps.s2 == 1) return out;
  if (eps.s1 == 1 && eps.s2 == -1) {
    out.t0 = rep.t1;
    out.t1 = rep.t0;
    out.t2 = rep.t3;
    out.t3 = rep.t2;
  } else if (eps.s1 == -1 && eps.s2 == 1) {
    out.t0 = rep.t2;
    out.t1 = rep.t3;
    out.t2 = rep.t0;
    out.t3 = rep.t1;
  } else {
    out.t0 = rep.t3;
    out.t1 = rep.t2;
    out.t2 = rep.t1;
    out.t3 = rep.t0;
  }
  if (out.meta) {
    Twist combined{out.meta->twist.s1 * eps.s1, out.meta->twist.s2 * eps.s2};
    out.meta->twist = combined;
  }
  return out;
}

RacahRep zeta_pullback(const DahaRep& rep) {
  check_dims(rep);
  Eigen::Index n = rep.dim;
  MatQ I = identity(n);
  auto quarter_square = [&](const MatQ& s) -> MatQ { return (s * s - I) * Rat(1, 4); };
  RacahRep out;
  out.dim = n;
  out.A = quarter_square(rep.t0 + rep.t1);
  out.B = quarter_square(rep.t0 + rep.t2);
  out.C = quarter_square(rep.t0 + rep.t3);
  out.D = commutator(out.A, out.B) * Rat(1, 2);
  out.meta = rep.meta;

  MatQ sum_sq = MatQ::Zero(n, n);
  for (int i = 0; i < 4; ++i) sum_sq += rep.t(i) * rep.t(i);
  MatQ delta_image = sum_sq * Rat(1, 4) - rep.t0 * Rat(1, 2) - I * Rat(3, 4);
  if (!mat_eq(out.A + out.B + out.C, delta_image))
    throw std::domain_error("zeta_pullback: delta-image identity failed");
  RelationCheck rc = verify_racah_relations(out);
  if (!rc.ok)
    throw std::domain_error("zeta_pullback: Racah relations failed: " + rc.failures.front());
  return out;
}

}  // namespace racah
