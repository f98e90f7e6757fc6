#include "bigpic/local_poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bigpic/errors.hpp"

namespace bigpic {

std::string to_string(ExtNat e) { return e.is_finite() ? std::to_string(e.value()) : "inf"; }

namespace {

Int reduce(const Int& z, const Int& modulus) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("local class needs a prime, got " + p.get_str());
}

void require_finite(const LocalClass& x) {
  if (!x.is_finite()) throw std::invalid_argument("operation defined only for finite local classes");
}

}  // namespace

LocalClass LocalClass::finite(const Int& p, unsigned long k, unsigned long l, const Int& z) {
  require_prime(p);
  LocalClass x;
  x.p = p;
  x.k = k;
  x.l = l;
  x.z = reduce(z, pow(p, l));
  return x;
}

LocalClass LocalClass::infinite_l(const Int& p, ExtNat k, const Int& z, unsigned long precision) {
  require_prime(p);
  LocalClass x;
  x.p = p;
  x.k = k;
  x.l = ExtNat::infinity();
  x.z_precision = precision;
  x.z = k.is_finite() ? reduce(z, pow(p, precision)) : Int(0);
  return x;
}

LocalClass LocalClass::infinite_k(const Int& p, ExtNat l) {
  require_prime(p);
  LocalClass x;
  x.p = p;
  x.k = ExtNat::infinity();
  x.l = l;
  x.z = 0;
  return x;
}

std::string to_string(const LocalClass& x) {
  std::ostringstream os;
  os << "(p=" << x.p << ", k=" << to_string(x.k) << ", l=" << to_string(x.l) << ", z=" << x.z;
  if (!x.l.is_finite()) os << " +O(" << x.p << "^" << x.z_precision << ")";
  os << ")";
  return os.str();
}

bool local_less(const LocalClass& x, const LocalClass& y) {
  if (x.k != y.k) return x.k < y.k;
  if (x.l != y.l) return x.l < y.l;
  return x.z < y.z;
}

LocalComparison compare(const LocalClass& x, const LocalClass& y) {
  if (x.p != y.p || x.k != y.k || x.l != y.l) return {false, std::nullopt};
  if (x.l.is_finite()) return {x.z == y.z, std::nullopt};
  const unsigned long prec = std::min(x.z_precision, y.z_precision);
  const Int mod = pow(x.p, prec);
  return {reduce(x.z, mod) == reduce(y.z, mod), prec};
}

LocalClass localize(const MatrixClass& m, const Int& p) {
  require_prime(p);
  const unsigned long k = valuation(m.a(), p);
  const unsigned long l = valuation(m.d(), p);
  // Scaling the first row by the inverse of the unit part of a is a
  // GL2(Z_p) operation; afterwards z only matters mod p^l.
  if (l == 0) return LocalClass::finite(p, k, 0, 0);
  const Int modulus = pow(p, l);
  const Int unit = m.a() / pow(p, k);
  Int inv;
  mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  return LocalClass::finite(p, k, l, m.b() * inv);
}

ExtNat local_level(const LocalClass& x) {
  ExtNat vz = ExtNat::infinity();
  if (x.z != 0) vz = valuation(x.z, x.p);
  return std::min({x.k, x.l, vz});
}

ExtNat local_niveau(const LocalClass& x) {
  if (!x.is_finite()) return ExtNat::infinity();
  return x.k.value() + x.l.value() - 2 * local_level(x).value();
}

bool local_leq(const LocalClass& x, const LocalClass& y) {
  if (x.p != y.p) throw PrimeMismatch();
  require_finite(x);
  require_finite(y);
  if (x.k > y.k || x.l > y.l) return false;
  // y * x^-1 has top-right entry p^-l (z' - p^(r-k) z); integrality is the
  // congruence modulo p^l of the smaller class.
  const Int diff = y.z - pow(x.p, y.k.value() - x.k.value()) * x.z;
  return mpz_divisible_p(diff.get_mpz_t(), pow(x.p, x.l.value()).get_mpz_t()) != 0;
}

namespace {

// Classes (p^k', z'; 0, p^l') with z' running over the residues mod p^l'
// congruent to `base` mod p^m.
void append_progression(std::vector<LocalClass>& out, const Int& p, unsigned long k, unsigned long l,
                        const Int& base, unsigned long m) {
  const Int step = pow(p, m);
  const Int count = pow(p, l - std::min(l, m));
  for (Int t = 0; t < count; ++t) out.push_back(LocalClass::finite(p, k, l, base + t * step));
}

}  // namespace

// Candidates are cut down by the congruence of local_leq and then checked
// against it.
std::vector<LocalClass> upward_neighbors(const LocalClass& x) {
  require_finite(x);
  const unsigned long k = x.k.value(), l = x.l.value();
  std::vector<LocalClass> candidates;
  append_progression(candidates, x.p, k + 1, l, x.p * x.z, l);
  append_progression(candidates, x.p, k, l + 1, x.z, l);
  std::vector<LocalClass> out;
  for (auto& y : candidates) {
    if (local_leq(x, y)) out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end(), local_less);
  return out;
}

std::vector<LocalClass> downward_neighbors(const LocalClass& x) {
  require_finite(x);
  const unsigned long k = x.k.value(), l = x.l.value();
  std::vector<LocalClass> candidates;
  // (k - 1, l): p z' = z mod p^l, so z' = z / p mod p^(l - 1).
  if (k > 0 && (l == 0 || x.z % x.p == 0)) {
    append_progression(candidates, x.p, k - 1, l, l == 0 ? Int(0) : Int(x.z / x.p), l == 0 ? 0 : l - 1);
  }
  if (l > 0) append_progression(candidates, x.p, k, l - 1, x.z, l - 1);
  std::vector<LocalClass> out;
  for (auto& y : candidates) {
    if (local_leq(y, x)) out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end(), local_less);
  return out;
}

std::string to_string(LocalType t) {
  switch (t) {
    case LocalType::ZeroZero: return "ZeroZero";
    case LocalType::ZeroPos: return "ZeroPos";
    case LocalType::PosZero: return "PosZero";
    case LocalType::PosPos: return "PosPos";
  }
  return "?";
}

LocalType classify(const LocalClass& x) {
  const bool level_pos = local_level(x) > ExtNat(0UL);
  const bool niveau_pos = local_niveau(x) > ExtNat(0UL);
  if (!level_pos) return niveau_pos ? LocalType::ZeroPos : LocalType::ZeroZero;
  return niveau_pos ? LocalType::PosPos : LocalType::PosZero;
}

NeighborCensus neighbor_census(const LocalClass& x) {
  NeighborCensus c;
  const ExtNat lx = local_level(x);
  for (const auto& y : upward_neighbors(x)) {
    (local_level(y) == lx ? c.up_same_level : c.up_level_raising) += 1;
  }
  for (const auto& y : downward_neighbors(x)) {
    (local_level(y) == lx ? c.down_same_level : c.down_level_lowering) += 1;
  }
  return c;
}

std::vector<LocalClass> local_classes_with_det_valuation(const Int& p, unsigned long n) {
  require_prime(p);
  std::vector<LocalClass> out;
  for (unsigned long k = 0; k <= n; ++k) append_progression(out, p, k, n - k, 0, 0);
  std::sort(out.begin(), out.end(), local_less);
  return out;
}

}  // namespace bigpic
