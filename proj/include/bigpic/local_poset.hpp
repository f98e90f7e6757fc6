#pragma once

// The p-local poset GL2(Z_p)\M2(Z_p). Every class has a Hermite form
// (p^k, z; 0, p^l) with z reduced mod p^l; k or l may be infinite (p^inf = 0)
// for classes of determinant zero.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bigpic/arith.hpp"
#include "bigpic/lattice.hpp"

namespace bigpic {

/// A natural number or infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(unsigned long v) : value_(v) {}  // NOLINT: implicit by design of the arithmetic
  static constexpr ExtNat infinity() {
    ExtNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  /// Throws std::bad_optional_access for infinity.
  constexpr unsigned long value() const { return value_.value(); }

  friend constexpr ExtNat operator+(ExtNat x, ExtNat y) {
    if (!x.is_finite() || !y.is_finite()) return infinity();
    return ExtNat(*x.value_ + *y.value_);
  }
  friend constexpr bool operator==(ExtNat x, ExtNat y) = default;
  friend constexpr std::strong_ordering operator<=>(ExtNat x, ExtNat y) {
    if (!x.is_finite()) return y.is_finite() ? std::strong_ordering::greater : std::strong_ordering::equal;
    if (!y.is_finite()) return std::strong_ordering::less;
    return *x.value_ <=> *y.value_;
  }

 private:
  std::optional<unsigned long> value_ = 0UL;
};

std::string to_string(ExtNat e);

struct LocalClass {
  Int p = 2;
  ExtNat k = 0UL;
  ExtNat l = 0UL;
  /// Reduced mod p^l when l is finite; otherwise a truncation mod
  /// p^z_precision.
  Int z = 0;
  /// Number of known p-adic digits of z; only meaningful when l is infinite.
  unsigned long z_precision = 0;

  /// Finite class (p^k, z; 0, p^l); z is reduced mod p^l.
  static LocalClass finite(const Int& p, unsigned long k, unsigned long l, const Int& z);
  /// Class with l = infinity (second row zero), z known to `precision` digits.
  /// k may itself be infinite, in which case z is forced to 0.
  static LocalClass infinite_l(const Int& p, ExtNat k, const Int& z, unsigned long precision);
  /// The class (0, 0; 0, p^l): k = infinity.
  static LocalClass infinite_k(const Int& p, ExtNat l);

  bool is_finite() const { return k.is_finite() && l.is_finite(); }
  /// v_p(det) = k + l.
  ExtNat det_valuation() const { return k + l; }

  friend bool operator==(const LocalClass&, const LocalClass&) = default;
};

std::string to_string(const LocalClass& x);

/// Sort key (k, l, z).
bool local_less(const LocalClass& x, const LocalClass& y);

struct LocalComparison {
  bool equal = false;
  /// Number of p-adic digits of z that were compared, when l is infinite.
  std::optional<unsigned long> precision_used;
};

/// Class equality; for l = infinity z is compared at the smaller precision.
LocalComparison compare(const LocalClass& x, const LocalClass& y);

/// Image of a global class in the p-component.
LocalClass localize(const MatrixClass& m, const Int& p);

/// Largest lambda with p^lambda dividing every entry.
ExtNat local_level(const LocalClass& x);
/// v_p(det) - 2 * level; infinite whenever the determinant is 0.
ExtNat local_niveau(const LocalClass& x);

/// x <= y. Requires finite classes over the same prime (PrimeMismatch
/// otherwise; std::invalid_argument for infinite exponents).
bool local_leq(const LocalClass& x, const LocalClass& y);

/// All y >= x with v_p(det y) = v_p(det x) + 1, sorted by (k, l, z).
std::vector<LocalClass> upward_neighbors(const LocalClass& x);
/// All y <= x with v_p(det y) = v_p(det x) - 1, sorted by (k, l, z).
std::vector<LocalClass> downward_neighbors(const LocalClass& x);

enum class LocalType { ZeroZero, ZeroPos, PosZero, PosPos };

std::string to_string(LocalType t);

/// (level = 0 or > 0) x (niveau = 0 or > 0); infinite niveau counts as > 0.
LocalType classify(const LocalClass& x);

/// Neighbor counts split by whether the level changes.
struct NeighborCensus {
  std::size_t up_same_level = 0;
  std::size_t up_level_raising = 0;
  std::size_t down_same_level = 0;
  std::size_t down_level_lowering = 0;

  friend bool operator==(const NeighborCensus&, const NeighborCensus&) = default;
};

NeighborCensus neighbor_census(const LocalClass& x);

/// Every finite class with v_p(det) = n, sorted by (k, l, z).
std::vector<LocalClass> local_classes_with_det_valuation(const Int& p, unsigned long n);

}  // namespace bigpic
