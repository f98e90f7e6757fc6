#pragma once

// Small dense exact linear algebra over Q.

#include <cstddef>
#include <vector>

#include "bigpic/arith.hpp"

namespace bigpic {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solution set { particular + sum t_i directions[i] } of A x = b.
struct AffineSolution {
  bool feasible = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;

  std::size_t dimension() const { return directions.size(); }
};

/// Gauss-Jordan elimination. `column_order` fixes the order in which columns
/// are tried as pivots (empty: natural order); columns late in the order
/// become the free parameters. Free parameters are 0 in `particular`.
AffineSolution solve_affine(const RationalMatrix& a, const std::vector<Rational>& b,
                            const std::vector<std::size_t>& column_order = {});

/// Determinant by fraction-exact elimination. Requires a square matrix.
Rational determinant(RationalMatrix m);

}  // namespace bigpic
