#include "racah/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace racah {

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
  // Accept only [-]digits[/digits]; gmp is laxer (whitespace, bases), so
  // validate the shape first.
  std::size_t i = 0;
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos > start;
  };
  if (i < s.size() && s[i] == '-') ++i;
  if (!digits(i)) throw std::invalid_argument("malformed rational: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw std::invalid_argument("malformed rational: " + s);
    ++i;
    if (!digits(i) || i != s.size())
      throw std::invalid_argument("malformed rational: " + s);
  }
  Rat x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

bool rational_sqrt(const Rat& x, Rat* root) {
  if (sgn(x) < 0) return false;
  Int num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rat(rn, rd);
  return true;
}

Rat pochhammer(const Rat& x, unsigned n) {
  Rat prod = 1;
  for (unsigned i = 1; i <= n; ++i) prod *= x + static_cast<long>(i) - 1;
  return prod;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace racah
