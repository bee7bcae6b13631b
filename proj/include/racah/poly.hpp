#pragma once

// Univariate polynomials over the rationals. Coefficients are stored dense,
// index = degree, with trailing zeros stripped; the zero polynomial has an
// empty coefficient vector and degree kMinusInfinity.

#include "racah/rat.hpp"

#include <map>
#include <vector>

namespace racah {

class PolyQ {
 public:
  static constexpr int kMinusInfinity = -1;

  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);
  static PolyQ constant(const Rat& c);
  // x - r
  static PolyQ linear_root(const Rat& r);

  bool is_zero() const { return coeffs_.empty(); }
  // kMinusInfinity for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const;

  Rat eval(const Rat& x) const;
  PolyQ derivative() const;
  PolyQ monic() const;

  friend PolyQ operator+(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator-(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
  PolyQ operator*(const Rat& c) const;
  bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }

  // Euclidean division; q nonzero.
  static void divmod(const PolyQ& p, const PolyQ& q, PolyQ* quot, PolyQ* rem);

  std::string str() const;  // human-readable, for diagnostics

 private:
  std::vector<Rat> coeffs_;
  void strip();
};

// Monic gcd; throws std::domain_error when both inputs are zero.
PolyQ poly_gcd(const PolyQ& p, const PolyQ& q);

struct RationalRoots {
  // root -> multiplicity, keys in increasing order
  std::map<Rat, int> roots;
  bool splits_over_rationals = false;
  int total_multiplicity() const;
};

// All rational roots with multiplicity, via the rational-root bound on the
// integer-cleared polynomial. Throws std::domain_error on the zero polynomial.
RationalRoots rational_roots(const PolyQ& p);

}  // namespace racah
