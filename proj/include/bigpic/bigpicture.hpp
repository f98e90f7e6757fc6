#pragma once

// Conway's big picture as the primitive classes of the matrix poset.
//
// A vertex X = (M, g/h) with M a positive rational and g/h in Q/Z embeds as
// (M N, (g/h) N; 0, N) for the least N making (g/h) N integral. The image is
// exactly the set of classes with coprime entries.

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "bigpic/arith.hpp"
#include "bigpic/lattice.hpp"

namespace bigpic {

class BigPictureVertex {
 public:
  /// The vertex (1, 0).
  BigPictureVertex() = default;
  /// Reduces r into [0, 1); throws std::invalid_argument unless M > 0.
  BigPictureVertex(Rational m, Rational r);

  const Rational& M() const noexcept { return m_; }
  /// The Q/Z label as a fraction g/h with 0 <= g < h, gcd(g, h) = 1.
  const Rational& r() const noexcept { return r_; }
  Int g() const { return r_.get_num(); }
  Int h() const { return r_.get_den(); }

  friend bool operator==(const BigPictureVertex&, const BigPictureVertex&) = default;

 private:
  Rational m_ = 1;
  Rational r_ = 0;
};

std::string to_string(const BigPictureVertex& v);

MatrixClass embed(const BigPictureVertex& x);

/// Inverse of embed; throws NotPrimitive if some prime divides every entry.
BigPictureVertex unembed(const MatrixClass& m);

/// Hyper-distance through the meet of the two embeddings.
Int delta(const BigPictureVertex& x, const BigPictureVertex& y);

/// Hyper-distance through alpha_X alpha_Y^-1 scaled to a primitive integral
/// matrix (the least positive scalar making it integral).
Int delta_direct(const BigPictureVertex& x, const BigPictureVertex& y);

/// X <= Y iff delta(1, Y) = delta(X, Y) * delta(1, X).
bool bp_leq(const BigPictureVertex& x, const BigPictureVertex& y);

struct PictureEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Int weight;

  friend bool operator==(const PictureEdge&, const PictureEdge&) = default;
};

struct PictureGraph {
  std::vector<BigPictureVertex> vertices;
  /// from < to; sorted lexicographically by (from, to).
  std::vector<PictureEdge> edges;
};

/// All primitive classes at hyper-distance exactly p from `center`, where p
/// is prime. Sorted canonically.
std::vector<MatrixClass> prime_neighbors(const MatrixClass& center, const Int& p);

/// Every vertex within multiplicative distance `radius` of `center`, with all
/// prime-weight edges among them. Vertices are ordered by (det of embedding,
/// a, b, d). Throws std::invalid_argument for radius < 1.
PictureGraph ball(const BigPictureVertex& center, const Int& radius);

/// Deterministic undirected DOT rendering.
std::string export_dot(const PictureGraph& g);

/// {"vertices":[{"M":"num/den","r":"g/h","det":n}],"edges":[[i,j,p]]}
std::string export_json(const PictureGraph& g);

}  // namespace bigpic
