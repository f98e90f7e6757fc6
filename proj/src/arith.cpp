#include "bigpic/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigpic {

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Int m = abs(n);
  unsigned long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

std::optional<long> valuation(const Rational& x, const Int& p) {
  if (x == 0) return std::nullopt;
  return static_cast<long>(valuation(x.get_num(), p)) -
         static_cast<long>(valuation(x.get_den(), p));
}

Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<Int> prime_divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  if (n < 2) return out;
  for (Int d = 2; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int smallest_prime_not_in(const std::vector<Int>& excluded) {
  Int p = 2;
  while (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return p;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& x, bool always_fraction) {
  if (!always_fraction && x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::size_t IntHash::operator()(const Int& x) const noexcept {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(z) + 1);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return seed;
}

}  // namespace bigpic
