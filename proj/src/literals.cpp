#include "bigpic/literals.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "bigpic/errors.hpp"

namespace bigpic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

template <typename Entry, typename ParseEntry>
std::vector<Entry> parse_two_by_two(std::string_view text, ParseEntry parse_entry) {
  const auto rows = split(trim(text), ';');
  if (rows.size() != 2) throw ParseError("matrix literal needs two rows separated by ';': '" + std::string(text) + "'");
  std::vector<Entry> out;
  for (const auto& row : rows) {
    const auto cells = split(row, ',');
    if (cells.size() != 2) throw ParseError("matrix row needs two entries: '" + std::string(row) + "'");
    for (const auto& c : cells) out.push_back(parse_entry(c));
  }
  return out;
}

}  // namespace

Int parse_integer(std::string_view text) {
  const std::string_view t = trim(text);
  std::size_t i = 0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i == t.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(t.substr(t[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

Rational parse_rational(std::string_view text) {
  const auto parts = split(trim(text), '/');
  if (parts.size() > 2) throw ParseError("expected a rational n or n/d, got '" + std::string(text) + "'");
  const Int num = parse_integer(parts[0]);
  const Int den = parts.size() == 2 ? parse_integer(parts[1]) : Int(1);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

IntMatrix2 parse_matrix(std::string_view text) {
  const auto e = parse_two_by_two<Int>(text, parse_integer);
  return {e[0], e[1], e[2], e[3]};
}

MoebiusMatrix parse_moebius(std::string_view text) {
  const auto e = parse_two_by_two<Rational>(text, parse_rational);
  return MoebiusMatrix(e[0], e[1], e[2], e[3]);
}

BigPictureVertex parse_vertex(std::string_view text) {
  const auto fields = split(trim(text), ',');
  std::optional<Rational> m, r;
  for (const auto& f : fields) {
    const std::string_view t = trim(f);
    if (t.starts_with("M=") && !m) {
      m = parse_rational(t.substr(2));
    } else if (t.starts_with("r=") && !r) {
      r = parse_rational(t.substr(2));
    } else {
      throw ParseError("vertex literal must be 'M=num/den,r=g/h', got '" + std::string(text) + "'");
    }
  }
  if (!m || !r) throw ParseError("vertex literal must be 'M=num/den,r=g/h', got '" + std::string(text) + "'");
  if (*m <= 0) throw ParseError("vertex needs M > 0");
  return BigPictureVertex(*m, *r);
}

ComponentwiseProfinite parse_supernatural(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "0") return ComponentwiseProfinite::zero_everywhere();
  if (t == "1") return ComponentwiseProfinite::one();
  std::map<Int, PrimeComponent> comps;
  for (const auto& factor : split(t, '*')) {
    const auto parts = split(trim(factor), '^');
    if (parts.size() != 2) throw ParseError("supernatural factor must be 'p^e' or 'p^inf': '" + std::string(factor) + "'");
    const Int p = parse_integer(parts[0]);
    if (!is_prime(p)) throw ParseError("supernatural base " + p.get_str() + " is not prime");
    if (comps.contains(p)) throw ParseError("prime " + p.get_str() + " repeated in supernatural literal");
    const std::string_view e = trim(parts[1]);
    if (e == "inf") {
      comps[p] = PrimeComponent::zero_component();
    } else {
      const Int exp = parse_integer(e);
      if (exp < 0 || !exp.fits_ulong_p()) throw ParseError("bad exponent in '" + std::string(factor) + "'");
      comps[p] = PrimeComponent::power(exp.get_ui());
    }
  }
  return ComponentwiseProfinite::from_components(comps);
}

std::string format_matrix(const IntMatrix2& m) {
  return m.a11.get_str() + "," + m.a12.get_str() + ";" + m.a21.get_str() + "," + m.a22.get_str();
}

std::string format_vertex(const BigPictureVertex& v) {
  return "M=" + to_fraction_string(v.M()) + ",r=" + to_fraction_string(v.r());
}

}  // namespace bigpic
