#pragma once

// The R_d(a,b,c) family of Racah-algebra modules: construction in the
// bidiagonal basis, closed-form spectra, irreducibility and
// diagonalizability criteria, and the lower-bidiagonal eigenbasis witness
// for C.

#include "racah/racah_core.hpp"

namespace racah {

// Membership of x in the descending step-2 set {hi, hi-2, ..., lo};
// empty when hi < lo.
bool in_step2_set(const Rat& x, const Rat& hi, const Rat& lo);

struct SpectrumTriple {
  std::vector<Rat> thetaA, thetaB, thetaC;  // length d+1 each
};

// theta_i(p) = (p + d/2 - i)(p + d/2 - i + 1)
Rat theta_value(const Rat& p, const Rat& half_d, int i);

// Scalar by which delta acts on R_d(a,b,c).
Rat delta_scalar_R(int d, const Rat& a, const Rat& b, const Rat& c);

// A lower-bidiagonal with diagonal theta_i(a) and subdiagonal 1; B
// upper-bidiagonal with diagonal theta_i(b) and superdiagonal phi_i;
// C = delta I - A - B; D = [A,B]/2.
RacahRep build_R(int d, const Rat& a, const Rat& b, const Rat& c);

Rat phi_R(int d, const Rat& a, const Rat& b, const Rat& c, int i);

SpectrumTriple spectrum_R(const ModuleSpec& spec);

// True iff none of a+b+c+1, -a+b+c, a-b+c, a+b-c lies in {d/2 - i : i=1..d}.
bool irr_criterion_R(const ModuleSpec& spec);

enum class Letter { A, B, C };

// For irreducible R_d(a,b,c): the chosen generator is diagonalizable iff
// 2a (resp. 2b, 2c) avoids {i-d-1 : i=1..2d-1}. Throws when the
// irreducibility precondition fails.
bool diag_criterion_R(Letter letter, const ModuleSpec& spec);

struct BasisWitness {
  std::vector<VecQ> basis;
  bool verified = false;
};

// The basis w_i on which C acts lower-bidiagonally, built from binomials
// and Pochhammer symbols; verified = true iff (C - thetaC_i) w_i = w_{i+1}
// (and = 0 at i = d) holds exactly.
BasisWitness c_basis_witness(const ModuleSpec& spec);

}  // namespace racah
