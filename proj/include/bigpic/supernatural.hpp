#pragma once

// Supernatural numbers inside the profinite integers, extensions of Q by Z,
// and the partially defined Moebius action of PGL2(Q) on them.
//
// The representable class: an element of Z^ = prod Z_p whose p-component is
// p^e or 0 at finitely many primes and 1 at every other prime, plus the
// element that is 0 everywhere. Every such component is a rational number, so
// the Moebius action can be evaluated exactly prime by prime.
//
// Ext classes are z modulo Z. Inside the representable class adding a nonzero
// integer n to z changes the default component 1 into 1 + n, which is not a
// prime power at every default prime, so two representable z define the same
// Ext class iff they are equal componentwise.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bigpic/arith.hpp"

namespace bigpic {

struct PrimeComponent {
  bool zero = false;
  /// Exponent e of p^e when not zero.
  unsigned long exponent = 0;

  static PrimeComponent power(unsigned long e) { return {false, e}; }
  static PrimeComponent zero_component() { return {true, 0}; }

  /// p^e or 0 as a rational number.
  Rational value(const Int& p) const;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

class ComponentwiseProfinite {
 public:
  /// The element 1.
  ComponentwiseProfinite() = default;

  static ComponentwiseProfinite one() { return {}; }
  /// s(0): zero at every prime.
  static ComponentwiseProfinite zero_everywhere();
  /// p-component p^(v_p(n)); s(0) is zero_everywhere(). Throws for n < 0.
  static ComponentwiseProfinite s_of(const Int& n);
  /// Zero at p, 1 elsewhere.
  static ComponentwiseProfinite p_infinity(const Int& p);
  /// Validates that every key is prime; drops Power(0) entries.
  static ComponentwiseProfinite from_components(const std::map<Int, PrimeComponent>& components);

  bool is_zero_everywhere() const noexcept { return zero_everywhere_; }
  bool is_one() const noexcept { return !zero_everywhere_ && components_.empty(); }

  PrimeComponent component(const Int& p) const;
  Rational value_at(const Int& p) const { return component(p).value(p); }
  /// Value at every prime outside support(): 1, or 0 for zero_everywhere().
  Rational default_value() const { return zero_everywhere_ ? Rational(0) : Rational(1); }

  /// Primes with a component other than the default, ascending.
  std::vector<Int> support() const;
  const std::map<Int, PrimeComponent>& components() const noexcept { return components_; }

  friend bool operator==(const ComponentwiseProfinite&, const ComponentwiseProfinite&) = default;

 private:
  std::map<Int, PrimeComponent> components_;
  bool zero_everywhere_ = false;
};

/// Literal form: "1", "0", or factors "p^e" (ascending p) followed by
/// "p^inf" (ascending p) joined by '*'.
std::string to_string(const ComponentwiseProfinite& x);

/// Componentwise product.
ComponentwiseProfinite multiply(const ComponentwiseProfinite& x, const ComponentwiseProfinite& y);

/// A projective rational matrix (a b; c d) acting on the right by
/// z -> (b + d z) / (a + c z). Stored with coprime integer entries and the
/// first nonzero entry positive.
class MoebiusMatrix {
 public:
  MoebiusMatrix() : MoebiusMatrix(1, 0, 0, 1) {}
  /// Throws Degenerate when ad - bc = 0.
  MoebiusMatrix(Rational a, Rational b, Rational c, Rational d);

  static MoebiusMatrix identity() { return {}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  friend MoebiusMatrix operator*(const MoebiusMatrix& x, const MoebiusMatrix& y);
  friend bool operator==(const MoebiusMatrix&, const MoebiusMatrix&) = default;

 private:
  Rational a_, b_, c_, d_;
};

std::string to_string(const MoebiusMatrix& g);

/// z . g, evaluated prime by prime. The matrix is only defined up to a
/// rational scalar, so a + c z only has to be an idele (nonzero at every
/// prime); rescaling then makes it a unit of Z^.
/// Throws NotAUnit(p) if a + c z_p = 0, NotRepresentable(p) if a resulting
/// component is neither 0 nor a power of p.
ComponentwiseProfinite moebius_apply(const MoebiusMatrix& g, const ComponentwiseProfinite& z);

/// The positive rational r with r (a + c z_p) a p-adic unit at every prime.
/// Throws NotAUnit like moebius_apply.
Rational unit_scaling(const MoebiusMatrix& g, const ComponentwiseProfinite& z);

/// Hermite form (s z; 0 s') over Z^.
struct ExtMatrix {
  ComponentwiseProfinite s;
  ComponentwiseProfinite z;
  ComponentwiseProfinite s_prime;
};

/// True iff s = 1 and s' = 0, the matrices whose group A_x is an extension
/// of Q by Z.
bool is_extension(const ExtMatrix& x);

/// (u, v) in A_x, i.e. x (u, v)^T lies in Z^2 at every prime.
bool ext_membership(const ExtMatrix& x, const Rational& u, const Rational& v);

enum class NotEquivalentReason { InfeasibleSystem, PrimeDivisorObstruction };

std::string to_string(NotEquivalentReason r);

struct Equivalent {
  MoebiusMatrix witness;
};
struct NotEquivalent {
  NotEquivalentReason reason;
};
struct Indeterminate {
  std::size_t solution_space_dim = 0;
};
using EquivVerdict = std::variant<Equivalent, NotEquivalent, Indeterminate>;

struct EquivOptions {
  /// Bound on |numerator| and denominator of each free parameter.
  unsigned long search_bound = 50;
  /// Hard cap on parameter tuples tried.
  std::size_t max_candidates = 1'000'000;
};

/// Decides whether some Moebius matrix maps z to z_prime.
EquivVerdict equiv_decide(const ComponentwiseProfinite& z, const ComponentwiseProfinite& z_prime,
                          const EquivOptions& options = {});

/// Determinant of the 4x4 system for s(p^k q^r) ~ s(p^u q^v), by elimination.
/// Throws std::invalid_argument if p == q.
Rational system_determinant(const Int& p, unsigned long k, unsigned long u, const Int& q, unsigned long r,
                            unsigned long v);

struct RepunitCollision {
  std::uint64_t x = 0, y = 0, n = 0, m = 0, value = 0;
  friend bool operator==(const RepunitCollision&, const RepunitCollision&) = default;
};

/// All (x^n - 1)/(x - 1) = (y^m - 1)/(y - 1) = value <= bound with
/// 2 <= x < y and n > m >= 3, sorted by (value, x, y).
std::vector<RepunitCollision> goormaghtigh_search(std::uint64_t bound);

/// Solves b + d = 1, a + c = 1, b = 0 and the p- and q-component equations of
/// s(p^k q^r) l^inf ~ s(p^(k+1) q^(r+1)) l^inf; returns a validated witness.
/// Requires p < q and l not in {p, q}, all prime (std::invalid_argument).
std::optional<MoebiusMatrix> goormaghtigh_witness(const Int& p, unsigned long k, const Int& q, unsigned long r,
                                                  const Int& l);

}  // namespace bigpic
