#include "bigpic/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bigpic/errors.hpp"

namespace bigpic {

Int IntMatrix2::content() const {
  Int g = gcd(a11, a12);
  g = gcd(g, a21);
  return gcd(g, a22);
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

IntMatrix2 operator*(const Int& s, const IntMatrix2& m) {
  return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
}

bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
  return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
}

std::string to_string(const IntMatrix2& m) {
  std::ostringstream os;
  os << "[[" << m.a11 << "," << m.a12 << "],[" << m.a21 << "," << m.a22 << "]]";
  return os.str();
}

MatrixClass MatrixClass::from_canonical(Int a, Int b, Int d) {
  if (a <= 0 || d <= 0 || b < 0 || b >= d) {
    throw std::invalid_argument("not a canonical Hermite triple");
  }
  return MatrixClass(std::move(a), std::move(b), std::move(d));
}

Int MatrixClass::content() const { return gcd(gcd(a_, b_), d_); }

bool canonical_less(const MatrixClass& x, const MatrixClass& y) {
  const Int dx = x.det(), dy = y.det();
  if (dx != dy) return dx < dy;
  if (x.a() != y.a()) return x.a() < y.a();
  if (x.b() != y.b()) return x.b() < y.b();
  return x.d() < y.d();
}

std::size_t MatrixClassHash::operator()(const MatrixClass& m) const noexcept {
  IntHash h;
  std::size_t seed = h(m.a());
  hash_combine(seed, h(m.b()));
  hash_combine(seed, h(m.d()));
  return seed;
}

std::string to_string(const MatrixClass& m) { return to_string(m.representative()); }

MatrixClass hermite_of_rows(std::span<const std::array<Int, 2>> rows) {
  // Row operations on column 0 collect its gcd in `pivot`; every eliminated
  // row leaves (0, x) behind and those x generate the second diagonal entry.
  std::array<Int, 2> pivot{0, 0};
  Int tail = 0;
  Int g, s, t;
  for (const auto& row : rows) {
    if (row[0] == 0) {
      tail = gcd(tail, row[1]);
      continue;
    }
    if (pivot[0] == 0) {
      tail = gcd(tail, pivot[1]);
      pivot = row;
      continue;
    }
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pivot[0].get_mpz_t(), row[0].get_mpz_t());
    const Int u = row[0] / g;
    const Int v = pivot[0] / g;
    const Int eliminated = u * pivot[1] - v * row[1];
    pivot = {g, s * pivot[1] + t * row[1]};
    tail = gcd(tail, eliminated);
  }
  if (pivot[0] == 0 || tail == 0) throw SingularMatrix();
  if (pivot[0] < 0) {
    pivot[0] = -pivot[0];
    pivot[1] = -pivot[1];
  }
  Int b;
  mpz_fdiv_r(b.get_mpz_t(), pivot[1].get_mpz_t(), tail.get_mpz_t());
  return MatrixClass::from_canonical(pivot[0], b, tail);
}

MatrixClass hnf(const IntMatrix2& m) {
  if (m.det() == 0) throw SingularMatrix();
  const std::array<std::array<Int, 2>, 2> rows{{{m.a11, m.a12}, {m.a21, m.a22}}};
  return hermite_of_rows(rows);
}

namespace {

// rep(y) * adj(rep(x)); divisible entrywise by det(x) iff x divides y.
IntMatrix2 scaled_ratio(const MatrixClass& x, const MatrixClass& y) {
  return y.representative() * x.representative().adjugate();
}

bool entries_divisible(const IntMatrix2& m, const Int& n) {
  auto div = [&n](const Int& e) { return mpz_divisible_p(e.get_mpz_t(), n.get_mpz_t()) != 0; };
  return div(m.a11) && div(m.a12) && div(m.a21) && div(m.a22);
}

IntMatrix2 divide_exact(const IntMatrix2& m, const Int& n) {
  return {m.a11 / n, m.a12 / n, m.a21 / n, m.a22 / n};
}

}  // namespace

bool divides(const MatrixClass& x, const MatrixClass& y) {
  return entries_divisible(scaled_ratio(x, y), x.det());
}

IntMatrix2 quotient(const MatrixClass& x, const MatrixClass& y) {
  const IntMatrix2 r = scaled_ratio(x, y);
  const Int n = x.det();
  if (!entries_divisible(r, n)) throw NotDivisible();
  return divide_exact(r, n);
}

MatrixClass meet(const MatrixClass& x, const MatrixClass& y) {
  const std::array<std::array<Int, 2>, 4> rows{{{x.a(), x.b()}, {0, x.d()}, {y.a(), y.b()}, {0, y.d()}}};
  return hermite_of_rows(rows);
}

MatrixClass join(const MatrixClass& x, const MatrixClass& y) {
  // Intersection of row lattices through duality: the dual of L1 cap L2 is
  // L1* + L2*. Everything is scaled by N = det x * det y to stay integral.
  const Int n = x.det() * y.det();
  const IntMatrix2 dx = y.det() * x.representative().adjugate().transpose();
  const IntMatrix2 dy = x.det() * y.representative().adjugate().transpose();
  const std::array<std::array<Int, 2>, 4> rows{
      {{dx.a11, dx.a12}, {dx.a21, dx.a22}, {dy.a11, dy.a12}, {dy.a21, dy.a22}}};
  const MatrixClass dual_sum = hermite_of_rows(rows);
  const IntMatrix2 back = n * dual_sum.representative().adjugate().transpose();
  const Int ds = dual_sum.det();
  if (!entries_divisible(back, ds)) throw std::logic_error("join: dual lattice not integral");
  return hnf(divide_exact(back, ds));
}

unsigned long level(const MatrixClass& m, const Int& p) { return valuation(m.content(), p); }

unsigned long niveau(const MatrixClass& m, const Int& p) {
  return valuation(m.det(), p) - 2 * level(m, p);
}

PrimitiveDecomposition primitive_decompose(const MatrixClass& m) {
  const Int n = m.content();
  return {n, MatrixClass::from_canonical(m.a() / n, m.b() / n, m.d() / n)};
}

MatrixClass scale(const Int& n, const MatrixClass& m) {
  if (n <= 0) throw std::invalid_argument("scale factor must be positive");
  return MatrixClass::from_canonical(n * m.a(), n * m.b(), n * m.d());
}

Int hyper_distance(const MatrixClass& x, const MatrixClass& y) {
  const MatrixClass w = meet(x, y);
  const Int dw = w.det();
  return (x.det() / dw) * (y.det() / dw);
}

int CharacterSpec::operator()(const Int& n) const {
  if (n == 0) throw std::invalid_argument("character evaluated at 0");
  int sign = n < 0 ? sign_at_minus_one : 1;
  for (const auto& [p, s] : sign_at_prime) {
    if (s == -1 && valuation(n, p) % 2 == 1) sign = -sign;
  }
  return sign;
}

IntMatrix2 apply_automorphism(const IntMatrix2& m, const CharacterSpec& chi, const IntMatrix2& g) {
  const Int dg = g.det();
  if (dg != 1 && dg != -1) throw NotUnimodular();
  const Int dm = m.det();
  if (dm == 0) throw SingularMatrix();
  const IntMatrix2 g_inv = dg * g.adjugate();
  return Int(chi(dm)) * (g * m * g_inv);
}

}  // namespace bigpic
