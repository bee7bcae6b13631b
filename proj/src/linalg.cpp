#include "racah/linalg.hpp"

#include <stdexcept>

namespace racah {

MatQ identity(Eigen::Index n) {
  MatQ m = MatQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool mat_eq(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool vec_eq(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero(const MatQ& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool is_zero(const VecQ& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
  if (ambient_dim != o.ambient_dim || vectors.size() != o.vectors.size())
    return false;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (!vec_eq(vectors[i], o.vectors[i])) return false;
  return true;
}

bool SubspaceBasis::contains(const VecQ& v) const {
  // Reduce v against the RREF rows.
  VecQ w = v;
  for (const VecQ& row : vectors) {
    Eigen::Index piv = 0;
    while (piv < ambient_dim && row(piv) == 0) ++piv;
    if (piv < ambient_dim && w(piv) != 0) w -= row * w(piv);
  }
  for (Eigen::Index i = 0; i < ambient_dim; ++i)
    if (w(i) != 0) return false;
  return true;
}

bool SubspaceBasis::contains(const SubspaceBasis& o) const {
  for (const VecQ& v : o.vectors)
    if (!contains(v)) return false;
  return true;
}

Eigen::Index rref_in_place(MatQ& m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    Rat inv = Rat(1) / m(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) m(rank, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

SubspaceBasis row_space(Eigen::Index ambient, const std::vector<VecQ>& vectors) {
  MatQ m(static_cast<Eigen::Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  Eigen::Index rank = rref_in_place(m);
  SubspaceBasis b;
  b.ambient_dim = ambient;
  for (Eigen::Index i = 0; i < rank; ++i) b.vectors.push_back(m.row(i).transpose());
  return b;
}

MatQ commutator(const MatQ& x, const MatQ& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw std::invalid_argument("commutator: size mismatch");
  return x * y - y * x;
}

SubspaceBasis kernel(const MatQ& m) {
  MatQ r = m;
  Eigen::Index rank = rref_in_place(r);
  Eigen::Index n = m.cols();
  // Pivot columns of the RREF.
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index row = 0; row < rank; ++row) {
    Eigen::Index c = 0;
    while (c < n && r(row, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<VecQ> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VecQ v = VecQ::Zero(n);
    v(free) = 1;
    for (Eigen::Index row = 0; row < rank; ++row)
      v(pivot_col[row]) = -r(row, free);
    basis.push_back(v);
  }
  return row_space(n, basis);
}

PolyQ char_poly(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
  Eigen::Index n = m.rows();
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  MatQ mk = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Rat ck = -trace(mk) / Rat(static_cast<long>(k));
    coeffs[n - k] = ck;
    if (k < n) {
      MatQ shifted = mk;
      for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += ck;
      mk = m * shifted;
    }
  }
  return PolyQ(std::move(coeffs));
}

SubspaceBasis eigenspace(const MatQ& m, const Rat& lambda) {
  MatQ shifted = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

DiagReport diagonalizability(const MatQ& m) {
  DiagReport rep;
  RationalRoots rr = rational_roots(char_poly(m));
  rep.spectrum = rr.roots;
  rep.splits = rr.splits_over_rationals;
  if (!rep.splits) return rep;
  rep.multiplicity_free = true;
  Eigen::Index geo_total = 0;
  for (auto& [lambda, mult] : rr.roots) {
    if (mult != 1) rep.multiplicity_free = false;
    geo_total += eigenspace(m, lambda).dim();
  }
  rep.diagonalizable = (geo_total == m.rows());
  return rep;
}

MatQ inverse(const MatQ& m) {
  Eigen::Index n = m.rows();
  MatQ aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity(n);
  rref_in_place(aug);
  // The augmented matrix always has full row rank thanks to the identity
  // block; singularity shows as a left block that fails to reduce to I.
  if (!mat_eq(aug.leftCols(n), identity(n)))
    throw std::domain_error("inverse: singular matrix");
  return aug.rightCols(n);
}

MatQ change_of_basis(const MatQ& m, const std::vector<VecQ>& basis) {
  Eigen::Index n = m.rows();
  if (static_cast<Eigen::Index>(basis.size()) != n)
    throw std::invalid_argument("change_of_basis: basis size mismatch");
  MatQ p(n, n);
  for (Eigen::Index j = 0; j < n; ++j) p.col(j) = basis[j];
  return inverse(p) * m * p;
}

std::optional<VecQ> solve(const MatQ& p, const VecQ& b) {
  Eigen::Index rows = p.rows(), cols = p.cols();
  MatQ aug(rows, cols + 1);
  aug.leftCols(cols) = p;
  aug.col(cols) = b;
  rref_in_place(aug);
  VecQ x = VecQ::Zero(cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    Eigen::Index c = 0;
    while (c < cols + 1 && aug(r, c) == 0) ++c;
    if (c == cols + 1) continue;          // zero row
    if (c == cols) return std::nullopt;   // 0 = nonzero: inconsistent
    x(c) = aug(r, cols);
  }
  // Free variables were set to zero; confirm the candidate really solves.
  VecQ check = p * x;
  if (!vec_eq(check, b)) return std::nullopt;
  return x;
}

bool is_irreducible_tridiagonal(const MatQ& m) {
  Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      long diff = std::labs(static_cast<long>(i) - static_cast<long>(j));
      if (diff >= 2 && m(i, j) != 0) return false;
      if (diff == 1 && m(i, j) == 0) return false;
    }
  }
  return true;
}

bool is_scalar_matrix(const MatQ& m, Rat* scalar) {
  Rat s = m(0, 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? s : Rat(0))) return false;
  if (scalar) *scalar = s;
  return true;
}

Rat trace(const MatQ& m) {
  Rat t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace racah
