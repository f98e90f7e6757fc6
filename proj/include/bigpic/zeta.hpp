#pragma once

// Dirichlet coefficients of the three zeta functions attached to the matrix
// monoids, each computed twice: from a closed formula (sieve) and by counting
// canonical representatives directly.
//
//   full monoid   sum over classes det^-s  = zeta(s) zeta(s-1)             sigma(n)
//   big picture   sum over primitive ones  = zeta(s) zeta(s-1) / zeta(2s)  psi(n)
//   ax+b monoid                            = zeta(s)                       1

#include <cstddef>
#include <string>
#include <vector>

#include "bigpic/arith.hpp"

namespace bigpic {

enum class ZetaKind { FullMonoid, BigPicture, AxPlusB, Auxiliary };

std::string to_string(ZetaKind k);

struct CoefficientTable {
  ZetaKind which = ZetaKind::Auxiliary;
  /// coeffs[n - 1] is the coefficient of n^-s.
  std::vector<Int> coeffs;

  std::size_t size() const { return coeffs.size(); }
  /// 1-based access.
  const Int& at(std::size_t n) const { return coeffs.at(n - 1); }
};

/// sigma(n) for n <= N by divisor sieve.
CoefficientTable sigma_coeffs(std::size_t n);

/// Number of classes [[a,b],[0,d]] with a d = n, 0 <= b < d.
CoefficientTable count_classes_by_det(std::size_t n);

/// psi(n) = n prod_{p | n} (1 + 1/p) by smallest-prime-factor sieve.
CoefficientTable psi_coeffs(std::size_t n);

/// Number of classes of determinant n whose entries are coprime.
CoefficientTable count_primitive_by_det(std::size_t n);

/// (x * y)(n) = sum_{d | n} x(d) y(n / d). Throws LengthMismatch.
CoefficientTable dirichlet_convolve(const CoefficientTable& x, const CoefficientTable& y);

/// Coefficients of zeta(2s): 1 at perfect squares, 0 elsewhere.
CoefficientTable square_indicator(std::size_t n);

/// Coefficients of zeta(s): all ones.
CoefficientTable riemann_coeffs(std::size_t n);

/// Number of units-classes of nonsingular (a b; 0 1) with determinant n,
/// counted by canonicalizing every (a, b) with |a| = n and 0 <= b < n.
CoefficientTable axpb_count(std::size_t n);

}  // namespace bigpic
