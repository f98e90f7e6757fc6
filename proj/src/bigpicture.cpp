#include "bigpic/bigpicture.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "bigpic/errors.hpp"

namespace bigpic {

BigPictureVertex::BigPictureVertex(Rational m, Rational r) : m_(std::move(m)), r_(std::move(r)) {
  m_.canonicalize();
  r_.canonicalize();
  if (m_ <= 0) throw std::invalid_argument("vertex scale M must be positive");
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r_.get_num_mpz_t(), r_.get_den_mpz_t());
  r_ -= fl;
  r_.canonicalize();
}

std::string to_string(const BigPictureVertex& v) {
  return "M=" + to_fraction_string(v.M(), false) + " r=" + to_fraction_string(v.r());
}

MatrixClass embed(const BigPictureVertex& x) {
  // Least N with M N and (g/h) N integral; the result then has coprime entries.
  Int n;
  mpz_lcm(n.get_mpz_t(), x.M().get_den_mpz_t(), x.r().get_den_mpz_t());
  const Rational top_left = x.M() * n;
  const Rational top_right = x.r() * n;
  return MatrixClass::from_canonical(top_left.get_num(), top_right.get_num(), n);
}

BigPictureVertex unembed(const MatrixClass& m) {
  if (!m.is_primitive()) throw NotPrimitive();
  return BigPictureVertex(make_rational(m.a(), m.d()), make_rational(m.b(), m.d()));
}

Int delta(const BigPictureVertex& x, const BigPictureVertex& y) {
  return hyper_distance(embed(x), embed(y));
}

Int delta_direct(const BigPictureVertex& x, const BigPictureVertex& y) {
  // alpha_X alpha_Y^-1 = (M_X / M_Y, r_X - M_X r_Y / M_Y; 0, 1)
  Rational ratio = x.M() / y.M();
  Rational shift = x.r() - ratio * y.r();
  ratio.canonicalize();
  shift.canonicalize();
  Int den_lcm;
  mpz_lcm(den_lcm.get_mpz_t(), ratio.get_den_mpz_t(), shift.get_den_mpz_t());
  // Scaled by den_lcm every entry is integral; dividing by the gcd of the
  // scaled entries gives the least positive scalar.
  const Int e11 = Rational(ratio * den_lcm).get_num();
  const Int e12 = Rational(shift * den_lcm).get_num();
  const Int e22 = den_lcm;
  const Int content = gcd(gcd(e11, e12), e22);
  return (e11 / content) * (e22 / content);
}

bool bp_leq(const BigPictureVertex& x, const BigPictureVertex& y) {
  const BigPictureVertex one;
  return delta_direct(one, y) == delta_direct(x, y) * delta_direct(one, x);
}

namespace {

std::vector<IntMatrix2> prime_determinant_forms(const Int& p) {
  std::vector<IntMatrix2> out;
  for (Int b = 0; b < p; ++b) out.push_back({1, b, 0, p});
  out.push_back({p, 0, 0, 1});
  return out;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<MatrixClass> prime_neighbors(const MatrixClass& center, const Int& p) {
  // Upward: m * c over the p + 1 classes m of determinant p. Downward: the
  // matrices p m^-1 run over right cosets, so c = (p m^-1) w gives
  // w = m c / p whenever that is integral.
  const IntMatrix2 rep = center.representative();
  std::vector<MatrixClass> out;
  for (const auto& m : prime_determinant_forms(p)) {
    const IntMatrix2 up = m * rep;
    const MatrixClass upc = hnf(up);
    if (upc.is_primitive()) out.push_back(upc);
    if (up.content() % p == 0) {
      const IntMatrix2 down{up.a11 / p, up.a12 / p, up.a21 / p, up.a22 / p};
      const MatrixClass downc = hnf(down);
      if (downc.is_primitive()) out.push_back(downc);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PictureGraph ball(const BigPictureVertex& center, const Int& radius) {
  if (radius < 1) throw std::invalid_argument("ball radius must be >= 1");
  if (!radius.fits_ulong_p()) throw std::invalid_argument("ball radius too large");
  const auto primes = primes_up_to(radius.get_ui());

  const MatrixClass c = embed(center);
  std::unordered_set<MatrixClass, MatrixClassHash> inside{c};
  std::unordered_set<MatrixClass, MatrixClassHash> outside;
  std::deque<MatrixClass> frontier{c};
  while (!frontier.empty()) {
    const MatrixClass v = frontier.front();
    frontier.pop_front();
    for (unsigned long p : primes) {
      for (auto& w : prime_neighbors(v, Int(p))) {
        if (inside.contains(w) || outside.contains(w)) continue;
        if (hyper_distance(c, w) <= radius) {
          inside.insert(w);
          frontier.push_back(std::move(w));
        } else {
          outside.insert(std::move(w));
        }
      }
    }
  }

  std::vector<MatrixClass> classes(inside.begin(), inside.end());
  std::sort(classes.begin(), classes.end(), canonical_less);
  std::unordered_map<MatrixClass, std::size_t, MatrixClassHash> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);

  PictureGraph g;
  g.vertices.reserve(classes.size());
  for (const auto& m : classes) g.vertices.push_back(unembed(m));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (unsigned long p : primes) {
      for (const auto& w : prime_neighbors(classes[i], Int(p))) {
        const auto it = index.find(w);
        if (it != index.end() && it->second > i) g.edges.push_back({i, it->second, Int(p)});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const PictureEdge& x, const PictureEdge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return g;
}

std::string export_dot(const PictureGraph& g) {
  std::ostringstream os;
  os << "graph bigpicture {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << to_string(g.vertices[i]) << "\", det=" << embed(g.vertices[i]).det()
       << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.from << " -- v" << e.to << " [label=\"" << e.weight << "\", weight=" << e.weight << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::ordered_json integer_json(const Int& n) {
  if (n.fits_ulong_p()) return n.get_ui();
  return n.get_str();
}

}  // namespace

std::string export_json(const PictureGraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices) {
    nlohmann::ordered_json node;
    node["M"] = to_fraction_string(v.M());
    node["r"] = to_fraction_string(v.r());
    node["det"] = integer_json(embed(v).det());
    out["vertices"].push_back(std::move(node));
  }
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    out["edges"].push_back({e.from, e.to, integer_json(e.weight)});
  }
  return out.dump() + "\n";
}

}  // namespace bigpic
