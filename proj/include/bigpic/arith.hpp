#pragma once

// Exact integer and rational helpers shared by all modules.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bigpic {

using Int = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer.
unsigned long valuation(const Int& n, const Int& p);

/// p-adic valuation of a rational; nullopt stands for +infinity (x == 0).
std::optional<long> valuation(const Rational& x, const Int& p);

Int pow(const Int& base, unsigned long e);

/// Distinct prime divisors of |n| in ascending order, by trial division.
/// Inputs in this library are small by construction.
std::vector<Int> prime_divisors(Int n);

bool is_prime(const Int& n);

/// Smallest prime not contained in the sorted list `excluded`.
Int smallest_prime_not_in(const std::vector<Int>& excluded);

Rational make_rational(const Int& num, const Int& den = 1);

/// "num/den" in lowest terms; integers render as "n/1" when `always_fraction`.
std::string to_fraction_string(const Rational& x, bool always_fraction = true);

struct IntHash {
  std::size_t operator()(const Int& x) const noexcept;
};

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace bigpic
