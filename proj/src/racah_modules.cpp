#include "racah/racah_modules.hpp"

#include <stdexcept>

namespace racah {

bool in_step2_set(const Rat& x, const Rat& hi, const Rat& lo) {
  if (hi < lo) return false;
  if (x > hi || x < lo) return false;
  Rat diff = hi - x;
  return is_integer(diff) && diff.get_num() % 2 == 0;
}

Rat theta_value(const Rat& p, const Rat& half_d, int i) {
  Rat base = p + half_d - i;
  return base * (base + 1);
}

Rat delta_scalar_R(int d, const Rat& a, const Rat& b, const Rat& c) {
  Rat h = rat(d, 2);
  return h * (h + 1) + a * (a + 1) + b * (b + 1) + c * (c + 1);
}

Rat phi_R(int d, const Rat& a, const Rat& b, const Rat& c, int i) {
  Rat h = rat(d, 2);
  return Rat(i) * Rat(i - d - 1) * (a + b + c + h - i + 2) * (a + b - c + h - i + 1);
}

RacahRep build_R(int d, const Rat& a, const Rat& b, const Rat& c) {
  if (d < 0) throw std::invalid_argument("build_R: d must be nonnegative");
  Eigen::Index n = d + 1;
  Rat h = rat(d, 2);
  RacahRep rep;
  rep.dim = n;
  rep.A = MatQ::Zero(n, n);
  rep.B = MatQ::Zero(n, n);
  for (int i = 0; i <= d; ++i) {
    rep.A(i, i) = theta_value(a, h, i);
    rep.B(i, i) = theta_value(b, h, i);
    if (i < d) rep.A(i + 1, i) = 1;
    if (i >= 1) rep.B(i - 1, i) = phi_R(d, a, b, c, i);
  }
  Rat delta = delta_scalar_R(d, a, b, c);
  rep.C = identity(n) * delta - rep.A - rep.B;
  rep.D = commutator(rep.A, rep.B) * Rat(1, 2);
  rep.meta = ModuleSpec(Family::R, d, a, b, c);
  return rep;
}

SpectrumTriple spectrum_R(const ModuleSpec& spec) {
  if (spec.family != Family::R)
    throw std::invalid_argument("spectrum_R: family must be R");
  SpectrumTriple st;
  Rat h = spec.half_d();
  for (int i = 0; i <= spec.d; ++i) {
    st.thetaA.push_back(theta_value(spec.a, h, i));
    st.thetaB.push_back(theta_value(spec.b, h, i));
    st.thetaC.push_back(theta_value(spec.c, h, i));
  }
  return st;
}

bool irr_criterion_R(const ModuleSpec& spec) {
  if (spec.family != Family::R)
    throw std::invalid_argument("irr_criterion_R: family must be R");
  Rat h = spec.half_d();
  const Rat sums[4] = {spec.a + spec.b + spec.c + 1, -spec.a + spec.b + spec.c,
                       spec.a - spec.b + spec.c, spec.a + spec.b - spec.c};
  for (const Rat& s : sums) {
    // {d/2 - i : i = 1..d} = {d/2 - 1, d/2 - 2, ..., -d/2}
    Rat diff = h - s;
    if (is_integer(diff) && diff >= 1 && diff <= spec.d) return false;
  }
  return true;
}

bool diag_criterion_R(Letter letter, const ModuleSpec& spec) {
  if (!irr_criterion_R(spec))
    throw std::domain_error("diag_criterion_R: module is not irreducible");
  Rat p = letter == Letter::A ? spec.a : letter == Letter::B ? spec.b : spec.c;
  // {i - d - 1 : i = 1..2d-1} = consecutive integers -d .. d-2
  Rat x = p * 2;
  if (!is_integer(x)) return true;
  return !(x >= -spec.d && x <= spec.d - 2);
}

BasisWitness c_basis_witness(const ModuleSpec& spec) {
  if (spec.family != Family::R)
    throw std::invalid_argument("c_basis_witness: family must be R");
  int d = spec.d;
  RacahRep rep = build_R(d, spec.a, spec.b, spec.c);
  Rat h = spec.half_d();
  BasisWitness w;
  for (int i = 0; i <= d; ++i) {
    VecQ wi = VecQ::Zero(d + 1);
    for (int hh = 0; hh <= i; ++hh) {
      Rat coeff = Rat(binomial(i, hh)) * pochhammer(Rat(d - i + 1), hh) *
                  pochhammer(spec.a + spec.b + spec.c + h - i + 2, hh);
      if (i % 2 == 1) coeff = -coeff;
      wi(i - hh) += coeff;
    }
    w.basis.push_back(wi);
  }
  w.verified = true;
  for (int i = 0; i <= d; ++i) {
    VecQ lhs = rep.C * w.basis[i] - w.basis[i] * theta_value(spec.c, h, i);
    VecQ rhs = i < d ? w.basis[i + 1] : VecQ(VecQ::Zero(d + 1));
    if (!vec_eq(lhs, rhs)) w.verified = false;
  }
  return w;
}

}  // namespace racah
