#pragma once

// Exact dense linear algebra over the rationals. Matrices act on column
// vectors: for an operator M and basis {v_j}, M v_j = sum_i M(i,j) v_i.

#include "racah/poly.hpp"
#include "racah/rat.hpp"

#include <optional>
#include <vector>

namespace racah {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

MatQ identity(Eigen::Index n);

// Exact entrywise equality (Eigen's operator== is coefficient-wise).
bool mat_eq(const MatQ& a, const MatQ& b);
bool vec_eq(const VecQ& a, const VecQ& b);
bool is_zero(const MatQ& a);
bool is_zero(const VecQ& a);

// Basis of a subspace, kept in reduced row echelon form so that equal
// subspaces have identical representations.
struct SubspaceBasis {
  Eigen::Index ambient_dim = 0;
  std::vector<VecQ> vectors;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(vectors.size()); }
  bool operator==(const SubspaceBasis& o) const;
  bool contains(const VecQ& v) const;
  bool contains(const SubspaceBasis& o) const;
};

// Row-reduce in place; returns rank. Pivot: first nonzero entry in column
// order (deterministic).
Eigen::Index rref_in_place(MatQ& m);

// RREF-normalized basis of the span of the given vectors.
SubspaceBasis row_space(Eigen::Index ambient, const std::vector<VecQ>& vectors);

MatQ commutator(const MatQ& x, const MatQ& y);

SubspaceBasis kernel(const MatQ& m);

// Monic characteristic polynomial (Faddeev-LeVerrier over exact rationals).
PolyQ char_poly(const MatQ& m);

SubspaceBasis eigenspace(const MatQ& m, const Rat& lambda);

struct DiagReport {
  bool diagonalizable = false;
  bool multiplicity_free = false;
  bool splits = false;
  // char-poly roots with algebraic multiplicity
  std::map<Rat, int> spectrum;
};

DiagReport diagonalizability(const MatQ& m);

// P^{-1} M P where P has the given basis vectors as columns. Throws on a
// singular basis matrix.
MatQ change_of_basis(const MatQ& m, const std::vector<VecQ>& basis);

MatQ inverse(const MatQ& m);  // throws std::domain_error when singular

// Solves P x = b exactly; nullopt when inconsistent (P may be rectangular
// with full column rank).
std::optional<VecQ> solve(const MatQ& p, const VecQ& b);

// True iff every |i-j| >= 2 entry is zero and every |i-j| == 1 entry is
// nonzero; 1x1 matrices qualify.
bool is_irreducible_tridiagonal(const MatQ& m);

bool is_scalar_matrix(const MatQ& m, Rat* scalar = nullptr);

Rat trace(const MatQ& m);

}  // namespace racah
