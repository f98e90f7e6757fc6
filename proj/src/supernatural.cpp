#include "bigpic/supernatural.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "bigpic/errors.hpp"
#include "bigpic/linear_system.hpp"

namespace bigpic {

Rational PrimeComponent::value(const Int& p) const {
  if (zero) return 0;
  return Rational(pow(p, exponent));
}

ComponentwiseProfinite ComponentwiseProfinite::zero_everywhere() {
  ComponentwiseProfinite x;
  x.zero_everywhere_ = true;
  return x;
}

ComponentwiseProfinite ComponentwiseProfinite::s_of(const Int& n) {
  if (n < 0) throw std::invalid_argument("s(n) needs n >= 0");
  if (n == 0) return zero_everywhere();
  ComponentwiseProfinite x;
  for (const auto& p : prime_divisors(n)) x.components_[p] = PrimeComponent::power(valuation(n, p));
  return x;
}

ComponentwiseProfinite ComponentwiseProfinite::p_infinity(const Int& p) {
  return from_components({{p, PrimeComponent::zero_component()}});
}

ComponentwiseProfinite ComponentwiseProfinite::from_components(const std::map<Int, PrimeComponent>& components) {
  ComponentwiseProfinite x;
  for (const auto& [p, c] : components) {
    if (!is_prime(p)) throw std::invalid_argument("component index " + p.get_str() + " is not prime");
    if (c.zero || c.exponent > 0) x.components_[p] = c;
  }
  return x;
}

PrimeComponent ComponentwiseProfinite::component(const Int& p) const {
  if (zero_everywhere_) return PrimeComponent::zero_component();
  const auto it = components_.find(p);
  return it == components_.end() ? PrimeComponent::power(0) : it->second;
}

std::vector<Int> ComponentwiseProfinite::support() const {
  std::vector<Int> out;
  out.reserve(components_.size());
  for (const auto& kv : components_) out.push_back(kv.first);
  return out;
}

std::string to_string(const ComponentwiseProfinite& x) {
  if (x.is_zero_everywhere()) return "0";
  if (x.is_one()) return "1";
  std::vector<std::string> factors;
  for (const auto& [p, c] : x.components()) {
    if (!c.zero) factors.push_back(p.get_str() + "^" + std::to_string(c.exponent));
  }
  for (const auto& [p, c] : x.components()) {
    if (c.zero) factors.push_back(p.get_str() + "^inf");
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '*';
    out += factors[i];
  }
  return out;
}

ComponentwiseProfinite multiply(const ComponentwiseProfinite& x, const ComponentwiseProfinite& y) {
  if (x.is_zero_everywhere() || y.is_zero_everywhere()) return ComponentwiseProfinite::zero_everywhere();
  std::map<Int, PrimeComponent> out = x.components();
  for (const auto& [p, c] : y.components()) {
    auto& slot = out[p];
    if (slot.zero || c.zero) {
      slot = PrimeComponent::zero_component();
    } else {
      slot.exponent += c.exponent;
    }
  }
  return ComponentwiseProfinite::from_components(out);
}

MoebiusMatrix::MoebiusMatrix(Rational a, Rational b, Rational c, Rational d) {
  for (auto* e : {&a, &b, &c, &d}) e->canonicalize();
  if (a * d - b * c == 0) throw Degenerate();
  Int den = 1;
  for (const auto* e : {&a, &b, &c, &d}) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e->get_den_mpz_t());
  Int num = 0;
  for (const auto* e : {&a, &b, &c, &d}) num = gcd(num, Rational(*e * den).get_num());
  Rational scale(den, num);
  scale.canonicalize();
  const Rational& first = a != 0 ? a : (b != 0 ? b : c);
  if (first < 0) scale = -scale;
  a_ = a * scale;
  b_ = b * scale;
  c_ = c * scale;
  d_ = d * scale;
}

MoebiusMatrix operator*(const MoebiusMatrix& x, const MoebiusMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::string to_string(const MoebiusMatrix& g) {
  return "[[" + to_fraction_string(g.a(), false) + "," + to_fraction_string(g.b(), false) + "],[" +
         to_fraction_string(g.c(), false) + "," + to_fraction_string(g.d(), false) + "]]";
}

namespace {

// The component p^e or 0 equal to `value`, if any.
std::optional<PrimeComponent> as_component(const Rational& value, const Int& p) {
  if (value == 0) return PrimeComponent::zero_component();
  if (value < 0 || value.get_den() != 1) return std::nullopt;
  const Int& n = value.get_num();
  const unsigned long e = valuation(n, p);
  if (pow(p, e) != n) return std::nullopt;
  return PrimeComponent::power(e);
}

// Smallest prime outside `support` at which the constant rational `value`
// is not 0 or a power of that prime.
Int default_prime_rejecting(const std::vector<Int>& support, const Rational& value) {
  std::vector<Int> skip = support;
  for (;;) {
    const Int q = smallest_prime_not_in(skip);
    if (!as_component(value, q)) return q;
    skip.push_back(q);
  }
}

}  // namespace

ComponentwiseProfinite moebius_apply(const MoebiusMatrix& g, const ComponentwiseProfinite& z) {
  const std::vector<Int> support = z.support();
  std::map<Int, PrimeComponent> out;
  for (const auto& p : support) {
    const Rational zp = z.value_at(p);
    const Rational den = g.a() + g.c() * zp;
    if (den == 0) throw NotAUnit(p);
    const auto comp = as_component((g.b() + g.d() * zp) / den, p);
    if (!comp) throw NotRepresentable(p);
    out[p] = *comp;
  }

  const Rational zd = z.default_value();
  const Rational den = g.a() + g.c() * zd;
  if (den == 0) throw NotAUnit(smallest_prime_not_in(support));
  const Rational value = (g.b() + g.d() * zd) / den;
  if (value == 1) return ComponentwiseProfinite::from_components(out);
  if (value == 0) {
    for (const auto& [p, c] : out) {
      if (!c.zero) throw NotRepresentable(smallest_prime_not_in(support));
    }
    return ComponentwiseProfinite::zero_everywhere();
  }
  throw NotRepresentable(default_prime_rejecting(support, value));
}

Rational unit_scaling(const MoebiusMatrix& g, const ComponentwiseProfinite& z) {
  const std::vector<Int> support = z.support();
  Rational r = 1;
  auto absorb = [&r](const Rational& x, const Int& p) {
    const long v = *valuation(x, p);
    const Rational pv(pow(p, static_cast<unsigned long>(v < 0 ? -v : v)));
    r = v > 0 ? Rational(r / pv) : Rational(r * pv);
  };
  for (const auto& p : support) {
    const Rational den = g.a() + g.c() * z.value_at(p);
    if (den == 0) throw NotAUnit(p);
    absorb(den, p);
  }
  const Rational den = g.a() + g.c() * z.default_value();
  if (den == 0) throw NotAUnit(smallest_prime_not_in(support));
  std::set<Int> extra;
  for (const auto& q : prime_divisors(den.get_num())) extra.insert(q);
  for (const auto& q : prime_divisors(den.get_den())) extra.insert(q);
  for (const auto& q : extra) {
    if (!std::binary_search(support.begin(), support.end(), q)) absorb(den, q);
  }
  r.canonicalize();
  return r;
}

bool is_extension(const ExtMatrix& x) { return x.s.is_one() && x.s_prime.is_zero_everywhere(); }

bool ext_membership(const ExtMatrix& x, const Rational& u, const Rational& v) {
  std::set<Int> primes;
  for (const auto* e : {&x.s, &x.z, &x.s_prime}) {
    for (const auto& p : e->support()) primes.insert(p);
  }
  for (const auto& p : prime_divisors(u.get_den())) primes.insert(p);
  for (const auto& p : prime_divisors(v.get_den())) primes.insert(p);
  // Outside this set every component is 0 or 1 and u, v are p-integral.
  auto integral = [](const Rational& w, const Int& p) {
    const auto val = valuation(w, p);
    return !val || *val >= 0;
  };
  for (const auto& p : primes) {
    const Rational top = x.s.value_at(p) * u + x.z.value_at(p) * v;
    const Rational bottom = x.s_prime.value_at(p) * v;
    if (!integral(top, p) || !integral(bottom, p)) return false;
  }
  return true;
}

std::string to_string(NotEquivalentReason r) {
  return r == NotEquivalentReason::InfeasibleSystem ? "infeasible-system" : "prime-divisor-obstruction";
}

namespace {

// Unknowns in column order a, b, c, d.
constexpr std::size_t kA = 0, kB = 1, kC = 2, kD = 3;

struct LinearEquations {
  RationalMatrix lhs;
  std::vector<Rational> rhs;

  void add(std::vector<Rational> row, Rational value) {
    lhs.push_back(std::move(row));
    rhs.push_back(std::move(value));
  }
};

// b + d z_p = z'_p (a + c z_p) for one prime.
void add_component_equation(LinearEquations& eq, const Rational& zp, const Rational& target) {
  std::vector<Rational> row(4);
  row[kA] = -target;
  row[kB] = 1;
  row[kC] = -target * zp;
  row[kD] = zp;
  eq.add(std::move(row), 0);
}

void add_normalization(LinearEquations& eq) {
  eq.add({1, 0, 1, 0}, 1);  // a + c = 1
  eq.add({0, 1, 0, 1}, 1);  // b + d = 1
}

std::optional<MoebiusMatrix> validated(const std::vector<Rational>& x, const ComponentwiseProfinite& z,
                                       const ComponentwiseProfinite& target) {
  if (x[kA] * x[kD] - x[kB] * x[kC] == 0) return std::nullopt;
  const MoebiusMatrix g(x[kA], x[kB], x[kC], x[kD]);
  try {
    if (moebius_apply(g, z) == target) return g;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

// Rationals with max(|num|, den) == h, gcd 1; ordered by den, then num.
std::vector<Rational> rationals_of_height(unsigned long h) {
  if (h == 0) return {Rational(0)};
  std::vector<Rational> out;
  const long hh = static_cast<long>(h);
  for (long den = 1; den <= hh; ++den) {
    for (long num = -hh; num <= hh; ++num) {
      if (std::max(std::labs(num), den) != hh) continue;
      if (std::gcd(std::labs(num), den) != 1) continue;
      out.emplace_back(num, den);
    }
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

// Tries parameter tuples of increasing height over the solution set.
std::optional<MoebiusMatrix> search_parameters(const AffineSolution& sol, const ComponentwiseProfinite& z,
                                               const ComponentwiseProfinite& target, const EquivOptions& opt) {
  const std::size_t dim = sol.dimension();
  std::vector<std::vector<Rational>> by_height;
  for (unsigned long h = 0; h <= opt.search_bound; ++h) by_height.push_back(rationals_of_height(h));

  std::size_t tried = 0;
  std::vector<Rational> params(dim);
  std::optional<MoebiusMatrix> found;

  // Visits every tuple whose largest height is exactly `level`.
  auto visit = [&](auto&& self, std::size_t i, unsigned long level, bool hit_level) -> bool {
    if (i == dim) {
      if (!hit_level) return false;
      if (++tried > opt.max_candidates) return true;
      std::vector<Rational> x = sol.particular;
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += params[j] * sol.directions[j][c];
      }
      found = validated(x, z, target);
      return found.has_value();
    }
    for (unsigned long h = 0; h <= level; ++h) {
      if (i + 1 == dim && !hit_level && h != level) continue;
      for (const auto& q : by_height[h]) {
        params[i] = q;
        if (self(self, i + 1, level, hit_level || h == level)) return true;
      }
    }
    return false;
  };
  for (unsigned long level = 0; level <= opt.search_bound; ++level) {
    if (visit(visit, 0, level, false)) break;
  }
  return found;
}

}  // namespace

EquivVerdict equiv_decide(const ComponentwiseProfinite& z, const ComponentwiseProfinite& z_prime,
                          const EquivOptions& options) {
  if (z == z_prime) return Equivalent{MoebiusMatrix::identity()};

  if (z.is_zero_everywhere() || z_prime.is_zero_everywhere()) {
    // A Moebius image of 0 is a rational constant, so only 0 and 1 qualify.
    if (z.is_one()) return Equivalent{MoebiusMatrix(1, -1, 0, 1)};
    if (z_prime.is_one()) return Equivalent{MoebiusMatrix(1, 1, 0, 1)};
    return NotEquivalent{NotEquivalentReason::InfeasibleSystem};
  }

  // Both are 1 at almost all primes, which forces a + c = b + d != 0; then a
  // prime that is 1 on one side only cannot be matched.
  if (z.support() != z_prime.support()) return NotEquivalent{NotEquivalentReason::PrimeDivisorObstruction};

  LinearEquations eq;
  add_normalization(eq);
  for (const auto& p : z.support()) add_component_equation(eq, z.value_at(p), z_prime.value_at(p));
  // c last, so that it becomes the free parameter first and c = 0 is tried
  // before anything else.
  const AffineSolution sol = solve_affine(eq.lhs, eq.rhs, {kA, kB, kD, kC});
  if (!sol.feasible) return NotEquivalent{NotEquivalentReason::InfeasibleSystem};
  if (sol.dimension() == 0) {
    if (auto g = validated(sol.particular, z, z_prime)) return Equivalent{*g};
    return NotEquivalent{NotEquivalentReason::InfeasibleSystem};
  }
  if (auto g = search_parameters(sol, z, z_prime, options)) return Equivalent{*g};
  return Indeterminate{sol.dimension()};
}

Rational system_determinant(const Int& p, unsigned long k, unsigned long u, const Int& q, unsigned long r,
                            unsigned long v) {
  if (p == q) throw std::invalid_argument("system_determinant needs distinct primes");
  RationalMatrix m{
      {1, 1, 0, 0},
      {0, 0, 1, 1},
      {1, Rational(pow(p, k)), Rational(pow(p, u)), Rational(pow(p, k + u))},
      {1, Rational(pow(q, r)), Rational(pow(q, v)), Rational(pow(q, r + v))},
  };
  return determinant(std::move(m));
}

std::vector<RepunitCollision> goormaghtigh_search(std::uint64_t bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> seen;
  for (std::uint64_t x = 2;; ++x) {
    // Three digits: 1 + x + x^2.
    if (x > (bound - 1) / (x + 1)) break;
    std::uint64_t value = 1 + x + x * x;
    if (value > bound) break;
    for (std::uint64_t n = 3;; ++n) {
      seen[value].emplace_back(x, n);
      if (value > (bound - 1) / x) break;
      value = value * x + 1;
    }
  }
  std::vector<RepunitCollision> out;
  for (const auto& [value, reps] : seen) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        auto lo = reps[i], hi = reps[j];
        if (lo.first > hi.first) std::swap(lo, hi);
        out.push_back({lo.first, hi.first, lo.second, hi.second, value});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RepunitCollision& a, const RepunitCollision& b) {
    return std::tie(a.value, a.x, a.y) < std::tie(b.value, b.x, b.y);
  });
  return out;
}

std::optional<MoebiusMatrix> goormaghtigh_witness(const Int& p, unsigned long k, const Int& q, unsigned long r,
                                                  const Int& l) {
  if (!is_prime(p) || !is_prime(q) || !is_prime(l)) throw std::invalid_argument("p, q, l must be prime");
  if (!(p < q)) throw std::invalid_argument("need p < q");
  if (l == p || l == q) throw std::invalid_argument("l must differ from p and q");

  const auto l_inf = ComponentwiseProfinite::p_infinity(l);
  const auto z = multiply(ComponentwiseProfinite::s_of(pow(p, k) * pow(q, r)), l_inf);
  const auto target = multiply(ComponentwiseProfinite::s_of(pow(p, k + 1) * pow(q, r + 1)), l_inf);

  LinearEquations eq;
  add_normalization(eq);
  add_component_equation(eq, Rational(pow(p, k)), Rational(pow(p, k + 1)));
  add_component_equation(eq, Rational(pow(q, r)), Rational(pow(q, r + 1)));
  eq.add({0, 1, 0, 0}, 0);  // b = 0, from the l-component 0 -> 0
  const AffineSolution sol = solve_affine(eq.lhs, eq.rhs, {kA, kB, kD, kC});
  if (!sol.feasible) return std::nullopt;
  if (sol.dimension() == 0) return validated(sol.particular, z, target);
  return search_parameters(sol, z, target, EquivOptions{});
}

}  // namespace bigpic
