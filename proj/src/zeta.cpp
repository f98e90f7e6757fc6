#include "bigpic/zeta.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "bigpic/errors.hpp"
#include "bigpic/lattice.hpp"

namespace bigpic {

std::string to_string(ZetaKind k) {
  switch (k) {
    case ZetaKind::FullMonoid: return "FullMonoid";
    case ZetaKind::BigPicture: return "BigPicture";
    case ZetaKind::AxPlusB: return "AxPlusB";
    case ZetaKind::Auxiliary: return "Auxiliary";
  }
  return "?";
}

namespace {

CoefficientTable zeros(ZetaKind which, std::size_t n) {
  if (n < 1) throw std::invalid_argument("coefficient table needs N >= 1");
  return {which, std::vector<Int>(n, Int(0))};
}

}  // namespace

CoefficientTable sigma_coeffs(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::FullMonoid, n);
  for (std::size_t d = 1; d <= n; ++d) {
    for (std::size_t m = d; m <= n; m += d) t.coeffs[m - 1] += static_cast<unsigned long>(d);
  }
  return t;
}

CoefficientTable count_classes_by_det(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::FullMonoid, n);
  std::vector<unsigned long> count(n + 1, 0);
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t d = 1; a * d <= n; ++d) {
      for (std::size_t b = 0; b < d; ++b) {
        const MatrixClass m = MatrixClass::from_canonical(Int(a), Int(b), Int(d));
        ++count[m.det().get_ui()];
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k) t.coeffs[k - 1] = count[k];
  return t;
}

CoefficientTable psi_coeffs(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::BigPicture, n);
  std::vector<std::size_t> spf(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  t.coeffs[0] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    // psi is multiplicative with psi(p^e) = p^(e-1) (p + 1).
    const std::size_t p = spf[m];
    std::size_t rest = m, pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    t.coeffs[m - 1] = t.coeffs[rest - 1] * static_cast<unsigned long>(pe / p * (p + 1));
  }
  return t;
}

CoefficientTable count_primitive_by_det(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::BigPicture, n);
  std::vector<unsigned long> count(n + 1, 0);
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t d = 1; a * d <= n; ++d) {
      for (std::size_t b = 0; b < d; ++b) {
        const MatrixClass m = MatrixClass::from_canonical(Int(a), Int(b), Int(d));
        if (m.is_primitive()) ++count[m.det().get_ui()];
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k) t.coeffs[k - 1] = count[k];
  return t;
}

CoefficientTable dirichlet_convolve(const CoefficientTable& x, const CoefficientTable& y) {
  if (x.size() != y.size()) throw LengthMismatch();
  CoefficientTable t = zeros(ZetaKind::Auxiliary, x.size());
  const std::size_t n = x.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (x.coeffs[d - 1] == 0) continue;
    for (std::size_t e = 1; d * e <= n; ++e) t.coeffs[d * e - 1] += x.coeffs[d - 1] * y.coeffs[e - 1];
  }
  return t;
}

CoefficientTable square_indicator(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::Auxiliary, n);
  for (std::size_t k = 1; k * k <= n; ++k) t.coeffs[k * k - 1] = 1;
  return t;
}

CoefficientTable riemann_coeffs(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::AxPlusB, n);
  for (auto& c : t.coeffs) c = 1;
  return t;
}

CoefficientTable axpb_count(std::size_t n) {
  CoefficientTable t = zeros(ZetaKind::AxPlusB, n);
  // The units (+-1, u; 0, 1) act from the left by (a, b) -> (+-a, +-b + u),
  // so every orbit contains exactly one (|a|, 0).
  auto canonical = [](long a, long) { return std::pair<long, long>{a < 0 ? -a : a, 0}; };
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<std::pair<long, long>> seen;
    const long a = static_cast<long>(k);
    for (long sign : {1L, -1L}) {
      for (long b = 0; b < a; ++b) seen.insert(canonical(sign * a, b));
    }
    t.coeffs[k - 1] = static_cast<unsigned long>(seen.size());
  }
  return t;
}

}  // namespace bigpic
