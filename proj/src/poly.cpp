#include "racah/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace racah {

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

PolyQ PolyQ::constant(const Rat& c) { return PolyQ({c}); }

PolyQ PolyQ::linear_root(const Rat& r) { return PolyQ({-r, 1}); }

void PolyQ::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rat PolyQ::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * static_cast<long>(i));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

PolyQ operator+(const PolyQ& p, const PolyQ& q) {
  std::vector<Rat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& p, const PolyQ& q) {
  std::vector<Rat> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
  if (p.is_zero() || q.is_zero()) return PolyQ();
  std::vector<Rat> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const Rat& c) const {
  std::vector<Rat> r = coeffs_;
  for (auto& x : r) x *= c;
  return PolyQ(std::move(r));
}

void PolyQ::divmod(const PolyQ& p, const PolyQ& q, PolyQ* quot, PolyQ* rem) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> r = p.coeffs_;
  int dq = q.degree();
  Rat lq = q.leading();
  std::vector<Rat> qu;
  if (static_cast<int>(r.size()) - 1 >= dq)
    qu.assign(r.size() - dq, Rat(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= dq; --i) {
    if (r[i] == 0) continue;
    Rat f = r[i] / lq;
    qu[i - dq] = f;
    for (int j = 0; j <= dq; ++j) r[i - dq + j] -= f * q.coeffs_[j];
  }
  if (quot) *quot = PolyQ(std::move(qu));
  if (rem) *rem = PolyQ(std::move(r));
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[i].get_str() << ")";
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

PolyQ poly_gcd(const PolyQ& p, const PolyQ& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  PolyQ a = p, b = q;
  while (!b.is_zero()) {
    PolyQ r;
    PolyQ::divmod(a, b, nullptr, &r);
    a = b;
    b = r;
  }
  return a.monic();
}

int RationalRoots::total_multiplicity() const {
  int s = 0;
  for (auto& [r, m] : roots) s += m;
  return s;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n composite, odd, not a perfect power of interest.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedul);
  while (true) {
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = rng.get_z_range(n), y = x, d = 1;
    auto step = [&](const Int& v) -> Int { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x - y;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Int(p)];
      n /= p;
    }
  }
  long p = 17;
  while (n > 1 && p < 100000) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Int(p)];
      n /= p;
    } else {
      p += 2;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Int> divisors(const Int& n) {
  std::map<Int, unsigned> f;
  factor_into(abs(n), f);
  std::vector<Int> divs{1};
  for (auto& [p, e] : f) {
    std::size_t sz = divs.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  return divs;
}

}  // namespace

RationalRoots rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  RationalRoots out;
  int n = p.degree();

  // Clear denominators to an integer polynomial.
  Int lcm = 1;
  for (const Rat& c : p.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ic(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rat c = p.coeff(i) * Rat(lcm);
    ic[i] = c.get_num();
  }

  // Roots at zero.
  int k = 0;
  while (k <= n && ic[k] == 0) ++k;
  PolyQ work = p;
  if (k > 0) {
    out.roots[Rat(0)] = k;
    for (int i = 0; i < k; ++i) {
      PolyQ q;
      PolyQ::divmod(work, PolyQ::linear_root(0), &q, nullptr);
      work = q;
    }
  }
  if (work.degree() >= 1) {
    Int a0 = ic[k];
    Int an = ic[n];
    std::vector<Int> num_divs = divisors(a0);
    std::vector<Int> den_divs = divisors(an);
    for (const Int& u : num_divs) {
      for (const Int& v : den_divs) {
        Int g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;  // reduced pairs only; duplicates add nothing
        for (int s : {1, -1}) {
          Rat cand(u * s, v);
          cand.canonicalize();
          if (work.eval(cand) != 0) continue;
          int mult = 0;
          PolyQ lin = PolyQ::linear_root(cand);
          while (true) {
            PolyQ q, r;
            PolyQ::divmod(work, lin, &q, &r);
            if (!r.is_zero()) break;
            work = q;
            ++mult;
          }
          out.roots[cand] = mult;
        }
      }
    }
  }
  out.splits_over_rationals = (out.total_multiplicity() == n);
  return out;
}

}  // namespace racah
