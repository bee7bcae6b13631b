#pragma once

// Exact rational scalars. All arithmetic in this project is carried out in
// mpq_class, which keeps values canonical (positive denominator, reduced).

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace Eigen {

// mpq_class as an Eigen scalar.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace racah {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize; always build fractions here.
inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Text format "[-]p/q" with "/q" omitted when q == 1.
std::string to_string(const Rat& x);

// Parses the text format above. Throws std::invalid_argument on malformed
// input or zero denominator.
Rat parse_rat(const std::string& s);

bool is_integer(const Rat& x);

// True when x is the square of a rational; if so *root is the nonnegative
// square root.
bool rational_sqrt(const Rat& x, Rat* root);

// Rising factorial (x)(x+1)...(x+n-1); 1 when n == 0.
Rat pochhammer(const Rat& x, unsigned n);

// Binomial coefficient as an exact integer.
Int binomial(unsigned n, unsigned k);

}  // namespace racah
