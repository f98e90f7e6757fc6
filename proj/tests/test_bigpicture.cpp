#include <map>
#include <random>

#include "doctest.h"

#include "bigpic/bigpicture.hpp"
#include "bigpic/errors.hpp"
#include "oracles.hpp"

using namespace bigpic;

namespace {

BigPictureVertex vx(long mn, long md, long g, long h) {
  return BigPictureVertex(make_rational(mn, md), make_rational(g, h));
}

const BigPictureVertex kOne{};

BigPictureVertex random_vertex(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<long> num(1, 3 * max_den);
  const long h = den(rng);
  std::uniform_int_distribution<long> g(0, h - 1);
  return BigPictureVertex(make_rational(num(rng), den(rng)), make_rational(g(rng), h));
}

}  // namespace

TEST_CASE("vertex normalization") {
  const BigPictureVertex v = vx(4, 2, 7, 4);
  CHECK(v.M() == 2);
  CHECK(v.r() == make_rational(3, 4));
  CHECK(vx(1, 1, -1, 3).r() == make_rational(2, 3));
  CHECK_THROWS_AS(vx(0, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(vx(-1, 2, 0, 1), std::invalid_argument);
  CHECK(to_string(vx(3, 2, 1, 2)) == "M=3/2 r=1/2");
  CHECK(to_string(kOne) == "M=1 r=0/1");
}

TEST_CASE("embed and unembed") {
  CHECK(embed(kOne) == MatrixClass{});
  CHECK(embed(vx(3, 2, 1, 2)) == MatrixClass::from_canonical(3, 1, 2));
  CHECK(embed(vx(2, 1, 0, 1)) == MatrixClass::from_canonical(2, 0, 1));
  CHECK(unembed(MatrixClass{}) == kOne);
  CHECK(unembed(MatrixClass::from_canonical(3, 1, 2)) == vx(3, 2, 1, 2));
  CHECK_THROWS_AS(unembed(MatrixClass::from_canonical(2, 0, 2)), NotPrimitive);
}

TEST_CASE("embed is a bijection onto primitive classes") {
  for (long n = 1; n <= 120; ++n) {
    for (const auto& m : oracle::upper_triangular_of_det(n)) {
      const MatrixClass c = hnf(m);
      if (!c.is_primitive()) continue;
      CHECK(embed(unembed(c)) == c);
    }
  }
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const BigPictureVertex v = random_vertex(rng, 30);
    const MatrixClass c = embed(v);
    CHECK(c.is_primitive());
    CHECK(unembed(c) == v);
  }
}

TEST_CASE("delta examples") {
  CHECK(delta(vx(3, 2, 1, 2), vx(3, 2, 1, 2)) == 1);
  CHECK(delta(kOne, vx(2, 1, 0, 1)) == 2);
  CHECK(delta(vx(2, 1, 0, 1), vx(1, 2, 0, 1)) == 4);

  CHECK(delta_direct(vx(5, 3, 2, 7), vx(5, 3, 2, 7)) == 1);
  CHECK(delta_direct(vx(2, 1, 0, 1), vx(1, 2, 0, 1)) == 4);
  CHECK(delta_direct(vx(3, 2, 1, 2), kOne) == 6);
}

TEST_CASE("bp_leq examples") {
  CHECK(bp_leq(vx(5, 3, 2, 7), vx(5, 3, 2, 7)));
  CHECK(bp_leq(kOne, vx(2, 1, 0, 1)));
  CHECK_FALSE(bp_leq(vx(2, 1, 0, 1), vx(1, 2, 0, 1)));
}

TEST_CASE("delta is a multiplicative metric") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 400; ++i) {
    const BigPictureVertex x = random_vertex(rng, 12);
    const BigPictureVertex y = random_vertex(rng, 12);
    const BigPictureVertex z = random_vertex(rng, 12);
    const Int dxy = delta(x, y);
    CHECK(dxy == delta(y, x));
    CHECK(dxy == delta_direct(x, y));
    CHECK((dxy == 1) == (x == y));
    CHECK(delta(x, z) <= dxy * delta(y, z));
  }
}

TEST_CASE("prime neighbors") {
  const auto n2 = prime_neighbors(MatrixClass{}, 2);
  REQUIRE(n2.size() == 3);
  for (const auto& w : n2) CHECK(w.det() == 2);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const MatrixClass c = embed(random_vertex(rng, 10));
    for (long p : {2L, 3L, 5L}) {
      const auto ns = prime_neighbors(c, p);
      CHECK(ns.size() == static_cast<std::size_t>(p + 1));
      for (const auto& w : ns) {
        CHECK(w.is_primitive());
        CHECK(hyper_distance(c, w) == p);
      }
    }
  }
}

TEST_CASE("ball counts") {
  const PictureGraph g1 = ball(kOne, 1);
  CHECK(g1.vertices.size() == 1);
  CHECK(g1.edges.empty());

  const PictureGraph g2 = ball(kOne, 2);
  CHECK(g2.vertices.size() == 4);
  CHECK(g2.edges.size() == 3);
  for (const auto& e : g2.edges) CHECK(e.weight == 2);

  const PictureGraph g6 = ball(kOne, 6);
  std::map<long, long> by_distance;
  for (const auto& v : g6.vertices) ++by_distance[delta(kOne, v).get_si()];
  const std::map<long, long> expected{{1, 1}, {2, 3}, {3, 4}, {4, 6}, {5, 6}, {6, 12}};
  CHECK(by_distance == expected);

  CHECK_THROWS_AS(ball(kOne, 0), std::invalid_argument);
}

TEST_CASE("ball around another center matches brute force") {
  // Every primitive class within distance R of the center has det at most
  // det(center) * R.
  const BigPictureVertex c = vx(3, 2, 1, 2);
  const Int radius = 10;
  const PictureGraph g = ball(c, radius);
  std::size_t expected = 0;
  for (long n = 1; n <= 60; ++n) {
    for (const auto& m : oracle::upper_triangular_of_det(n)) {
      const MatrixClass w = hnf(m);
      if (w.is_primitive() && hyper_distance(embed(c), w) <= radius) ++expected;
    }
  }
  CHECK(g.vertices.size() == expected);
  for (std::size_t i = 1; i < g.vertices.size(); ++i) {
    CHECK(canonical_less(embed(g.vertices[i - 1]), embed(g.vertices[i])));
  }
}

TEST_CASE("dot and json export") {
  CHECK(export_dot(PictureGraph{}) == "graph bigpicture {\n}\n");
  CHECK(export_dot(ball(kOne, 1)) == "graph bigpicture {\n  v0 [label=\"M=1 r=0/1\", det=1];\n}\n");
  const std::string dot = export_dot(ball(kOne, 2));
  CHECK(dot ==
        "graph bigpicture {\n"
        "  v0 [label=\"M=1 r=0/1\", det=1];\n"
        "  v1 [label=\"M=1/2 r=0/1\", det=2];\n"
        "  v2 [label=\"M=1/2 r=1/2\", det=2];\n"
        "  v3 [label=\"M=2 r=0/1\", det=2];\n"
        "  v0 -- v1 [label=\"2\", weight=2];\n"
        "  v0 -- v2 [label=\"2\", weight=2];\n"
        "  v0 -- v3 [label=\"2\", weight=2];\n"
        "}\n");
  CHECK(export_json(ball(kOne, 1)) == "{\"vertices\":[{\"M\":\"1/1\",\"r\":\"0/1\",\"det\":1}],\"edges\":[]}\n");
}
