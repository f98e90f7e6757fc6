#pragma once

// Nonsingular 2x2 integer matrices modulo left multiplication by GL2(Z).
//
// A class is stored by its Hermite normal form [[a, b], [0, d]] with a, d > 0
// and 0 <= b < d; equality of classes is equality of these three numbers.
// The order is divisibility: x <= y iff y = m * x for an integral m, i.e. the
// row lattice of y is contained in the row lattice of x.

#include <array>
#include <map>
#include <span>
#include <string>

#include "bigpic/arith.hpp"

namespace bigpic {

struct IntMatrix2 {
  Int a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  static IntMatrix2 identity() { return {}; }
  static IntMatrix2 diag(const Int& x, const Int& y) { return {x, 0, 0, y}; }

  Int det() const { return a11 * a22 - a12 * a21; }
  IntMatrix2 adjugate() const { return {a22, -a12, -a21, a11}; }
  IntMatrix2 transpose() const { return {a11, a21, a12, a22}; }
  /// gcd of the four entries.
  Int content() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend IntMatrix2 operator*(const Int& s, const IntMatrix2& m);
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y);
};

std::string to_string(const IntMatrix2& m);

class MatrixClass {
 public:
  /// The identity class, the minimum of the order.
  MatrixClass() = default;

  /// Builds a class from an already canonical triple; throws
  /// std::invalid_argument when 0 <= b < d, a > 0, d > 0 does not hold.
  static MatrixClass from_canonical(Int a, Int b, Int d);

  const Int& a() const noexcept { return a_; }
  const Int& b() const noexcept { return b_; }
  const Int& d() const noexcept { return d_; }

  Int det() const { return a_ * d_; }
  Int content() const;
  bool is_primitive() const { return content() == 1; }
  IntMatrix2 representative() const { return {a_, b_, 0, d_}; }

  friend bool operator==(const MatrixClass& x, const MatrixClass& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  MatrixClass(Int a, Int b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  Int a_ = 1, b_ = 0, d_ = 1;
};

/// Output ordering: ascending determinant, then lexicographic (a, b, d).
bool canonical_less(const MatrixClass& x, const MatrixClass& y);

struct MatrixClassHash {
  std::size_t operator()(const MatrixClass& m) const noexcept;
};

std::string to_string(const MatrixClass& m);

/// Hermite normal form of the row lattice spanned by `rows`. The rows must
/// span a rank-2 lattice, otherwise SingularMatrix is thrown.
MatrixClass hermite_of_rows(std::span<const std::array<Int, 2>> rows);

/// Canonical class of m. Throws SingularMatrix if det(m) = 0.
MatrixClass hnf(const IntMatrix2& m);

bool divides(const MatrixClass& x, const MatrixClass& y);

/// The integral m with m * rep(x) = rep(y). Throws NotDivisible.
IntMatrix2 quotient(const MatrixClass& x, const MatrixClass& y);

/// Greatest lower bound (sum of row lattices).
MatrixClass meet(const MatrixClass& x, const MatrixClass& y);

/// Least upper bound (intersection of row lattices).
MatrixClass join(const MatrixClass& x, const MatrixClass& y);

unsigned long level(const MatrixClass& m, const Int& p);
unsigned long niveau(const MatrixClass& m, const Int& p);

struct PrimitiveDecomposition {
  Int scalar;
  MatrixClass primitive;
};

/// m = scalar * primitive with primitive of content 1.
PrimitiveDecomposition primitive_decompose(const MatrixClass& m);

/// Scalar multiple of a class (n > 0).
MatrixClass scale(const Int& n, const MatrixClass& m);

/// det(x') * det(y') where x = x' w, y = y' w and w = meet(x, y).
Int hyper_distance(const MatrixClass& x, const MatrixClass& y);

/// A character Q^x -> {1, -1}, fixed by its value at -1 and at finitely
/// many primes (+1 at every prime not listed).
struct CharacterSpec {
  int sign_at_minus_one = 1;
  std::map<Int, int> sign_at_prime;

  int operator()(const Int& n) const;
};

/// chi(det m) * g * m * g^-1. Throws NotUnimodular unless det g = +-1 and
/// SingularMatrix if det m = 0.
IntMatrix2 apply_automorphism(const IntMatrix2& m, const CharacterSpec& chi, const IntMatrix2& g);

}  // namespace bigpic
