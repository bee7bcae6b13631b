#include "racah/daha_modules.hpp"

#include "racah/module_engine.hpp"

#include <stdexcept>

namespace racah {

DerivedParams derived_params(const ModuleSpec& spec) {
  DerivedParams p;
  Rat half_d1 = rat(spec.d + 1, 2);
  p.sigma = spec.a + spec.b + spec.c - half_d1;
  p.tau = spec.a + spec.b - spec.c - half_d1;
  if (spec.family == Family::O) {
    p.lambda = spec.a - spec.b - spec.c - half_d1;
    p.mu = spec.c - spec.a - spec.b - half_d1;
    p.nu = spec.b - spec.a - spec.c - half_d1;
  }
  return p;
}

std::array<Rat, 4> central_scalars_H(const ModuleSpec& spec) {
  if (spec.family == Family::E) {
    Rat q = rat((spec.d + 1) * (spec.d + 1), 4);
    return {q, spec.a * spec.a, spec.b * spec.b, spec.c * spec.c};
  }
  DerivedParams p = derived_params(spec);
  auto sq = [](const Rat& x) -> Rat {
    Rat h = x / 2;
    return h * h;
  };
  // t2 has diagonal +-nu/2 in the defining basis and t3 has +-mu/2, so the
  // squares are (nu/2)^2 and (mu/2)^2 respectively.
  return {sq(p.sigma), sq(*p.lambda), sq(*p.nu), sq(*p.mu)};
}

namespace {

void verify_construction(const DahaRep& rep, const ModuleSpec& spec) {
  DahaCheck chk = verify_daha_relations(rep);
  if (!chk.ok)
    throw std::logic_error("module construction violates relations: " +
                           chk.failures.front() + " on " + spec.str());
  std::array<Rat, 4> expected = central_scalars_H(spec);
  if (!chk.central_scalars || *chk.central_scalars != expected)
    throw std::logic_error("module construction has wrong central scalars on " +
                           spec.str());
}

}  // namespace

DahaRep build_E(int d, const Rat& a, const Rat& b, const Rat& c) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("build_E: d must be odd and positive");
  ModuleSpec spec(Family::E, d, a, b, c);
  DerivedParams dp = derived_params(spec);
  const Rat &sigma = dp.sigma, &tau = dp.tau;
  Eigen::Index n = d + 1;
  DahaRep rep;
  rep.dim = n;
  rep.t0 = MatQ::Zero(n, n);
  rep.t1 = MatQ::Zero(n, n);
  rep.t2 = MatQ::Zero(n, n);
  rep.t3 = MatQ::Zero(n, n);

  // t0
  rep.t0(0, 0) = rat(-(d + 1), 2);
  rep.t0(d, d) = rat(-(d + 1), 2);
  for (int i = 2; i <= d - 1; i += 2) {
    rep.t0(i - 1, i) = Rat(i) * Rat(d - i + 1);
    rep.t0(i, i) = rat(-(d - 2 * i + 1), 2);
  }
  for (int i = 1; i <= d - 2; i += 2) {
    rep.t0(i, i) = rat(d - 2 * i - 1, 2);
    rep.t0(i + 1, i) = 1;
  }
  // t1
  rep.t1(0, 0) = a;
  rep.t1(1, 0) = 1;
  for (int i = 2; i <= d - 1; i += 2) {
    rep.t1(i - 1, i) = Rat(i) * Rat(i - d - 1);
    rep.t1(i, i) = a;
    rep.t1(i + 1, i) = 1;
  }
  for (int i = 1; i <= d; i += 2) rep.t1(i, i) = -a;
  // t2
  for (int i = 0; i <= d - 1; i += 2) rep.t2(i, i) = b;
  for (int i = 1; i <= d - 2; i += 2) {
    rep.t2(i - 1, i) = -(sigma + i) * (tau + i);
    rep.t2(i, i) = -b;
    rep.t2(i + 1, i) = -1;
  }
  rep.t2(d - 1, d) = -(sigma + d) * (tau + d);
  rep.t2(d, d) = -b;
  // t3
  for (int i = 0; i <= d - 1; i += 2) {
    rep.t3(i, i) = -(sigma + tau + 2 * i + 2) / 2;
    rep.t3(i + 1, i) = -1;
  }
  for (int i = 1; i <= d; i += 2) {
    rep.t3(i - 1, i) = (sigma + i) * (tau + i);
    rep.t3(i, i) = (sigma + tau + 2 * i) / 2;
  }

  rep.meta = spec;
  verify_construction(rep, spec);
  return rep;
}

DahaRep build_O(int d, const Rat& a, const Rat& b, const Rat& c) {
  if (d < 0 || d % 2 != 0)
    throw std::invalid_argument("build_O: d must be even and nonnegative");
  ModuleSpec spec(Family::O, d, a, b, c);
  DerivedParams dp = derived_params(spec);
  const Rat &sigma = dp.sigma, &tau = dp.tau;
  const Rat &lambda = *dp.lambda, &mu = *dp.mu, &nu = *dp.nu;
  Eigen::Index n = d + 1;
  DahaRep rep;
  rep.dim = n;
  rep.t0 = MatQ::Zero(n, n);
  rep.t1 = MatQ::Zero(n, n);
  rep.t2 = MatQ::Zero(n, n);
  rep.t3 = MatQ::Zero(n, n);

  // t0
  rep.t0(0, 0) = sigma / 2;
  for (int i = 2; i <= d; i += 2) {
    rep.t0(i - 1, i) = -Rat(i) * (sigma + i);
    rep.t0(i, i) = (sigma + 2 * i) / 2;
  }
  for (int i = 1; i <= d - 1; i += 2) {
    rep.t0(i, i) = -(sigma + 2 * i + 2) / 2;
    rep.t0(i + 1, i) = 1;
  }
  // t1 (basis terms out of range are dropped, which matters only at d = 0)
  rep.t1(0, 0) = lambda / 2;
  if (d >= 1) rep.t1(1, 0) = 1;
  if (d >= 2) {
    rep.t1(d - 1, d) = Rat(d) * (sigma + d);
    rep.t1(d, d) = lambda / 2;
  }
  for (int i = 2; i <= d - 2; i += 2) {
    rep.t1(i - 1, i) = Rat(i) * (sigma + i);
    rep.t1(i, i) = lambda / 2;
    rep.t1(i + 1, i) = 1;
  }
  for (int i = 1; i <= d - 1; i += 2) rep.t1(i, i) = -lambda / 2;
  // t2
  for (int i = 0; i <= d; i += 2) rep.t2(i, i) = nu / 2;
  for (int i = 1; i <= d - 1; i += 2) {
    // Forced by the sum relation: must cancel the (i-d-1)(tau+i) entry of t3.
    rep.t2(i - 1, i) = Rat(d - i + 1) * (tau + i);
    rep.t2(i, i) = -nu / 2;
    rep.t2(i + 1, i) = -1;
  }
  // t3
  rep.t3(d, d) = mu / 2;
  for (int i = 0; i <= d - 2; i += 2) {
    rep.t3(i, i) = (2 * d + mu - 2 * i) / 2;
    rep.t3(i + 1, i) = -1;
  }
  for (int i = 1; i <= d - 1; i += 2) {
    rep.t3(i - 1, i) = Rat(i - d - 1) * (tau + i);
    rep.t3(i, i) = -(2 * d + mu - 2 * i + 2) / 2;
  }

  rep.meta = spec;
  verify_construction(rep, spec);
  return rep;
}

DahaRep build_H(const ModuleSpec& spec) {
  if (spec.family == Family::E)
    return twist(build_E(spec.d, spec.a, spec.b, spec.c), spec.twist);
  if (spec.family == Family::O) return build_O(spec.d, spec.a, spec.b, spec.c);
  throw std::invalid_argument("build_H: family must be E or O");
}

bool irr_criterion_H(const ModuleSpec& spec) {
  if (spec.family == Family::E) {
    const Rat sums[4] = {spec.a + spec.b + spec.c, -spec.a + spec.b + spec.c,
                         spec.a - spec.b + spec.c, spec.a + spec.b - spec.c};
    // {(d-1)/2 - i : i = 0,2,...,d-1} descending step-2 from (d-1)/2 to -(d-1)/2
    Rat hi = rat(spec.d - 1, 2);
    for (const Rat& s : sums)
      if (in_step2_set(s, hi, -hi)) return false;
    return true;
  }
  if (spec.family == Family::O) {
    const Rat sums[4] = {spec.a + spec.b + spec.c, spec.a - spec.b - spec.c,
                         -spec.a + spec.b - spec.c, -spec.a - spec.b + spec.c};
    // {(d+1)/2 - i : i = 2,4,...,d} descending step-2
    Rat hi = rat(spec.d + 1, 2) - 2;
    Rat lo = rat(spec.d + 1, 2) - spec.d;
    for (const Rat& s : sums)
      if (in_step2_set(s, hi, lo)) return false;
    return true;
  }
  throw std::invalid_argument("irr_criterion_H: family must be E or O");
}

ModuleSpec classify_H(const DahaRep& rep) {
  GeneratorSet gens = daha_generators(rep);
  if (!brute_irreducible(gens))
    throw std::domain_error("classify_H: module is reducible");
  int d = static_cast<int>(rep.dim) - 1;
  if (rep.dim % 2 == 0) {
    const Twist twists[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (const Twist& eps : twists) {
      DahaRep tw = twist(rep, eps);
      if (trace(tw.t0) != Rat(-(d + 1))) continue;
      Rat vals[3];
      const MatQ* ts[3] = {&tw.t1, &tw.t2, &tw.t3};
      for (int k = 0; k < 3; ++k) {
        MatQ sq = (*ts[k]) * (*ts[k]);
        Rat s;
        if (!is_scalar_matrix(sq, &s))
          throw std::domain_error("classify_H: generator square is not scalar");
        if (!rational_sqrt(s, &vals[k]))
          throw std::domain_error("classify_H: non-rational parameters");
      }
      return ModuleSpec(Family::E, d, vals[0], vals[1], vals[2], eps);
    }
    throw std::domain_error("classify_H: not in catalog");
  }
  Rat half = rat(d + 1, 2);
  Rat a = trace(rep.t0) + trace(rep.t1) + half;
  Rat b = trace(rep.t0) + trace(rep.t2) + half;
  Rat c = trace(rep.t0) + trace(rep.t3) + half;
  return ModuleSpec(Family::O, d, a, b, c);
}

bool pm_diag_criterion(GenPair pair, const ModuleSpec& spec) {
  if (!irr_criterion_H(spec))
    throw std::domain_error("pm_diag_criterion: module is not irreducible");
  const Rat& p = pair == GenPair::T01 ? spec.a
               : pair == GenPair::T02 ? spec.b
                                      : spec.c;
  return !in_step2_set(p * 2, Rat(spec.d - 1), Rat(1 - spec.d));
}

BasisWitness special_basis_witness(GenPair pair, const ModuleSpec& spec) {
  if (spec.family != Family::E && spec.family != Family::O)
    throw std::invalid_argument("special_basis_witness: family must be E or O");
  if (pair != GenPair::T01 && !irr_criterion_H(spec))
    throw std::domain_error("special_basis_witness: module is not irreducible");
  DahaRep rep = spec.family == Family::E
                    ? build_E(spec.d, spec.a, spec.b, spec.c)
                    : build_O(spec.d, spec.a, spec.b, spec.c);
  int d = spec.d;
  Eigen::Index n = d + 1;
  int k = pair == GenPair::T01 ? 1 : pair == GenPair::T02 ? 2 : 3;
  const Rat& p = pair == GenPair::T01 ? spec.a
               : pair == GenPair::T02 ? spec.b
                                      : spec.c;
  MatQ sum = rep.t0 + rep.t(k);
  auto step_op = [&](int i) {
    // t0 + tk + (-1)^i (d/2 - p - i) + 1/2
    Rat shift = rat(d, 2) - p - i;
    if (i % 2 == 1) shift = -shift;
    MatQ m = sum;
    for (Eigen::Index r = 0; r < n; ++r) m(r, r) += shift + Rat(1, 2);
    return m;
  };

  auto try_seed = [&](const VecQ& seed) -> std::optional<BasisWitness> {
    BasisWitness w;
    w.basis.push_back(seed);
    for (int i = 0; i < d; ++i) w.basis.push_back(step_op(i) * w.basis.back());
    MatQ m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) m.col(j) = w.basis[j];
    if (rref_in_place(m) != n) return std::nullopt;
    if (!is_zero(VecQ(step_op(d) * w.basis.back()))) return std::nullopt;
    w.verified = true;
    return w;
  };

  if (pair == GenPair::T01) {
    // The defining basis realizes the chain directly.
    VecQ e0 = VecQ::Zero(n);
    e0(0) = 1;
    if (auto w = try_seed(e0)) {
      // Confirm the chain reproduces the standard basis itself.
      bool standard = true;
      for (int i = 0; i <= d; ++i) {
        VecQ ei = VecQ::Zero(n);
        ei(i) = 1;
        if (!vec_eq(w->basis[i], ei)) standard = false;
      }
      w->verified = w->verified && standard;
      return *w;
    }
    return BasisWitness{};
  }

  for (Eigen::Index j = 0; j < n; ++j) {
    VecQ seed = VecQ::Zero(n);
    seed(j) = 1;
    if (auto w = try_seed(seed)) return *w;
  }
  // Deterministic fallback combinations.
  for (long s = 1; s <= 8; ++s) {
    VecQ seed(n);
    Rat x = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      seed(j) = x;
      x = x * Rat(s + 1) + 1;
    }
    if (auto w = try_seed(seed)) return *w;
  }
  return BasisWitness{};
}

FactorPrediction predicted_factors(const ModuleSpec& spec) {
  if (!irr_criterion_H(spec))
    throw std::domain_error("predicted_factors: module is not irreducible");
  FactorPrediction out;
  const Rat &a = spec.a, &b = spec.b, &c = spec.c;
  int d = spec.d;
  auto R = [](int dd, Rat ra, Rat rb, Rat rc) {
    return ModuleSpec(Family::R, dd, std::move(ra), std::move(rb), std::move(rc));
  };
  if (spec.family == Family::E) {
    Rat a1 = -(a + 1) / 2, b1 = -(b + 1) / 2, c1 = -(c + 1) / 2;
    const Twist& t = spec.twist;
    if (t.is_identity()) {
      if (d == 1) {
        out.factors = {R(1, a1, b1, c1)};
      } else {
        out.factors = {R((d + 1) / 2, a1, b1, c1), R((d - 3) / 2, a1, b1, c1)};
      }
    } else if (t.s1 == 1 && t.s2 == -1) {
      out.factors = {R((d - 1) / 2, -a / 2, b1, c1),
                     R((d - 1) / 2, -a / 2 - 1, b1, c1)};
    } else if (t.s1 == -1 && t.s2 == 1) {
      out.factors = {R((d - 1) / 2, a1, -b / 2, c1),
                     R((d - 1) / 2, a1, -b / 2 - 1, c1)};
    } else {
      out.factors = {R((d - 1) / 2, a1, b1, -c / 2),
                     R((d - 1) / 2, a1, b1, -c / 2 - 1)};
    }
    return out;
  }
  if (spec.family == Family::O) {
    if (d == 0) {
      out.factors = {R(0, -a / 2 - Rat(1, 4), -b / 2 - Rat(1, 4), -c / 2 - Rat(1, 4))};
    } else if (a + b + c == rat(d + 1, 2)) {
      out.factors = {R(d / 2 - 1, -a / 2 - Rat(3, 4), -b / 2 - Rat(3, 4),
                       -c / 2 - Rat(3, 4)),
                     R(0, -(b + c + 1) / 2, -(a + c + 1) / 2, -(a + b + 1) / 2)};
      out.completeness = FactorPrediction::Completeness::classes_only;
    } else {
      out.factors = {R(d / 2, -a / 2 - Rat(1, 4), -b / 2 - Rat(1, 4),
                       -c / 2 - Rat(1, 4)),
                     R(d / 2 - 1, -a / 2 - Rat(3, 4), -b / 2 - Rat(3, 4),
                       -c / 2 - Rat(3, 4))};
    }
    return out;
  }
  throw std::invalid_argument("predicted_factors: family must be E or O");
}

bool factor_mf_criterion(Letter letter, const ModuleSpec& spec) {
  if (!irr_criterion_H(spec))
    throw std::domain_error("factor_mf_criterion: module is not irreducible");
  const Rat& p = letter == Letter::A ? spec.a
               : letter == Letter::B ? spec.b
                                     : spec.c;
  int d = spec.d;
  Rat x = p * 2;
  if (spec.family == Family::E) {
    const Twist& t = spec.twist;
    bool full_set;
    if (t.is_identity()) {
      full_set = true;
    } else if (t.s1 == 1 && t.s2 == -1) {
      full_set = (letter == Letter::A);
    } else if (t.s1 == -1 && t.s2 == 1) {
      full_set = (letter == Letter::B);
    } else {
      full_set = (letter == Letter::C);
    }
    if (!full_set) return !in_step2_set(x, Rat(d - 3), Rat(3 - d));
    bool bad = in_step2_set(x, Rat(d - 1), Rat(1 - d));
    // Non-identity twist, distinguished letter: the two factors are
    // R_{d'}(p') with d' = (d-1)/2 and 2p' in {-2p, -2p-2}; the letter fails
    // to be multiplicity-free on R_{d'}(p') exactly when 2p' lies in the
    // consecutive range [-d', d'-2]. The union of the two shifted ranges is
    // the step-2 set {d-1, ..., 1-d}, except that the middle point 0 drops
    // out when d' <= 1 (d <= 3): the two ranges are then too short to reach
    // it. The identity twist (factors R_{(d+1)/2} and R_{(d-3)/2} sharing one
    // parameter) keeps the full set for every d.
    if (!t.is_identity() && d <= 3 && x == 0) bad = false;
    return !bad;
  }
  if (spec.family == Family::O) {
    if (spec.a + spec.b + spec.c == rat(d + 1, 2))
      return !in_step2_set(x, Rat(d - 5), Rat(3 - d));
    return !in_step2_set(x, Rat(d - 1), Rat(3 - d));
  }
  throw std::invalid_argument("factor_mf_criterion: family must be E or O");
}

}  // namespace racah
