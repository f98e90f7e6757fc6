#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "bigpic/bigpicture.hpp"
#include "bigpic/errors.hpp"
#include "bigpic/lattice.hpp"
#include "bigpic/literals.hpp"
#include "bigpic/supernatural.hpp"
#include "bigpic/zeta.hpp"

using namespace bigpic;
using json = nlohmann::ordered_json;

namespace {

// Exact integers: JSON numbers while they fit in 64 bits, decimal strings otherwise.
json int_json(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

MatrixClass parse_point(const std::string& text) {
  if (text.find("M=") != std::string::npos || text.find("r=") != std::string::npos) {
    return embed(parse_vertex(text));
  }
  return hnf(parse_matrix(text));
}

int cmd_hnf(const std::string& literal) {
  const MatrixClass h = hnf(parse_matrix(literal));
  json out;
  out["hnf"] = json::array({json::array({int_json(h.a()), int_json(h.b())}), json::array({0, int_json(h.d())})});
  out["det"] = int_json(h.det());
  out["primitive"] = h.is_primitive();
  out["content"] = int_json(h.content());
  emit(out);
  return 0;
}

int cmd_dist(const std::string& x_text, const std::string& y_text) {
  const MatrixClass x = parse_point(x_text);
  const MatrixClass y = parse_point(y_text);
  const Int d = hyper_distance(x, y);
  json out;
  out["delta"] = int_json(d);
  if (x.is_primitive() && y.is_primitive()) {
    const Int via = delta_direct(unembed(x), unembed(y));
    out["via_alpha"] = int_json(via);
    out["agree"] = via == d;
  } else {
    out["via_alpha"] = nullptr;
    out["agree"] = nullptr;
  }
  emit(out);
  return 0;
}

int cmd_ball(const std::string& center, std::uint64_t radius, const std::string& format) {
  const PictureGraph g = ball(parse_vertex(center), Int(static_cast<unsigned long>(radius)));
  std::cout << (format == "json" ? export_json(g) : export_dot(g));
  std::cerr << "ball radius " << radius << ": " << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges\n";
  return 0;
}

struct ZetaSources {
  CoefficientTable (*formula)(std::size_t);
  CoefficientTable (*enumeration)(std::size_t);
};

ZetaSources zeta_sources(const std::string& which) {
  if (which == "M") return {sigma_coeffs, count_classes_by_det};
  if (which == "P") return {psi_coeffs, count_primitive_by_det};
  return {riemann_coeffs, axpb_count};
}

int cmd_zeta(const std::string& which, std::size_t terms, const std::string& mode, const std::string& format,
             bool header) {
  const ZetaSources src = zeta_sources(which);
  std::optional<CoefficientTable> formula, enumeration;
  if (mode != "enumerate") formula = src.formula(terms);
  if (mode != "formula") enumeration = src.enumeration(terms);

  std::size_t mismatches = 0;
  if (formula && enumeration) {
    for (std::size_t n = 1; n <= terms; ++n) mismatches += formula->at(n) != enumeration->at(n) ? 1 : 0;
  }

  if (format == "json") {
    auto column = [](const CoefficientTable& t) {
      json a = json::array();
      for (const auto& c : t.coeffs) a.push_back(int_json(c));
      return a;
    };
    if (formula && enumeration) {
      json out;
      out["formula"] = column(*formula);
      out["enumeration"] = column(*enumeration);
      out["mismatches"] = mismatches;
      emit(out);
    } else {
      emit(column(formula ? *formula : *enumeration));
    }
  } else {
    if (header) std::cout << (formula && enumeration ? "n,formula,enumeration\n" : "n,coefficient\n");
    for (std::size_t n = 1; n <= terms; ++n) {
      std::cout << n;
      if (formula) std::cout << "," << formula->at(n);
      if (enumeration) std::cout << "," << enumeration->at(n);
      std::cout << "\n";
    }
    if (formula && enumeration) std::cout << "mismatches," << mismatches << "\n";
  }
  if (formula && enumeration) std::cerr << "zeta " << which << ": " << mismatches << " mismatches in " << terms
                                        << " terms\n";
  return mismatches == 0 ? 0 : 1;
}

json moebius_json(const MoebiusMatrix& g) {
  auto entry = [](const Rational& q) { return int_json(Rational(q).get_num()); };
  return json::array({json::array({entry(g.a()), entry(g.b())}), json::array({entry(g.c()), entry(g.d())})});
}

int cmd_ext_equiv(const std::string& z_text, const std::string& z_prime_text, unsigned long search_bound) {
  EquivOptions opt;
  opt.search_bound = search_bound;
  const EquivVerdict v = equiv_decide(parse_supernatural(z_text), parse_supernatural(z_prime_text), opt);
  json out;
  if (const auto* e = std::get_if<Equivalent>(&v)) {
    out["verdict"] = "Equivalent";
    out["witness"] = moebius_json(e->witness);
  } else if (const auto* n = std::get_if<NotEquivalent>(&v)) {
    out["verdict"] = "NotEquivalent";
    out["reason"] = to_string(n->reason);
  } else {
    out["verdict"] = "Indeterminate";
    out["solution_space_dim"] = std::get<Indeterminate>(v).solution_space_dim;
  }
  emit(out);
  return 0;
}

int cmd_ext_apply(const std::string& g_text, const std::string& z_text) {
  std::cout << to_string(moebius_apply(parse_moebius(g_text), parse_supernatural(z_text))) << "\n";
  return 0;
}

int cmd_ext_member(const std::string& s_text, const std::string& z_text, const std::string& s_prime_text,
                   const std::string& u_text, const std::string& v_text) {
  const ExtMatrix x{parse_supernatural(s_text), parse_supernatural(z_text), parse_supernatural(s_prime_text)};
  std::cout << (ext_membership(x, parse_rational(u_text), parse_rational(v_text)) ? "true" : "false") << "\n";
  return 0;
}

int cmd_goormaghtigh(std::uint64_t bound, const std::string& format, bool header) {
  const auto rows = goormaghtigh_search(bound);
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"x", r.x}, {"y", r.y}, {"n", r.n}, {"m", r.m}, {"value", r.value}});
    emit(out);
  } else {
    if (header) std::cout << "x,y,n,m,value\n";
    for (const auto& r : rows) std::cout << r.x << "," << r.y << "," << r.n << "," << r.m << "," << r.value << "\n";
  }
  std::cerr << "goormaghtigh bound " << bound << ": " << rows.size() << " collisions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the matrix poset, Conway's big picture and extensions of Q by Z"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bigpic 0.1.0");

  std::string format;
  bool header = false;

  auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form of a 2x2 integer matrix \"a,b;c,d\"");
  std::string hnf_matrix;
  hnf_cmd->add_option("matrix", hnf_matrix, "Matrix literal")->required();

  auto* dist_cmd = app.add_subcommand("dist", "Hyper-distance between two vertices or matrices");
  std::string dist_x, dist_y;
  dist_cmd->add_option("x", dist_x, "Vertex \"M=num/den,r=g/h\" or matrix \"a,b;c,d\"")->required();
  dist_cmd->add_option("y", dist_y, "Vertex or matrix literal")->required();

  auto* ball_cmd = app.add_subcommand("ball", "Ball of the big picture graph around a vertex");
  std::string ball_center = "M=1,r=0";
  std::uint64_t radius = 1;
  std::string ball_format = "dot";
  ball_cmd->add_option("center", ball_center, "Center vertex")->capture_default_str();
  ball_cmd->add_option("--radius", radius, "Multiplicative radius")->required()->check(CLI::Range(
      std::uint64_t{1}, std::uint64_t{1000000}));
  ball_cmd->add_option("--format", ball_format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  auto* zeta_cmd = app.add_subcommand("zeta", "Dirichlet coefficients of the zeta functions");
  std::string which;
  std::size_t terms = 0;
  std::string mode = "formula";
  std::string zeta_format = "csv";
  zeta_cmd->add_option("which", which, "M (all classes), P (big picture) or Pbar (ax+b)")
      ->required()
      ->check(CLI::IsMember({"M", "P", "Pbar"}));
  zeta_cmd->add_option("--terms", terms, "Number of coefficients")->required()->check(CLI::Range(
      std::size_t{1}, std::size_t{10000000}));
  zeta_cmd->add_option("--mode", mode, "formula, enumerate or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}))
      ->capture_default_str();
  zeta_cmd->add_option("--format", zeta_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  zeta_cmd->add_flag("--header", header, "Print a CSV header line");

  auto* ext_cmd = app.add_subcommand("ext", "Extensions of Q by Z and the Moebius action");
  ext_cmd->require_subcommand(1);
  auto* equiv_cmd = ext_cmd->add_subcommand("equiv", "Decide whether two supernatural numbers are equivalent");
  std::string z_text, z_prime_text;
  unsigned long search_bound = 50;
  equiv_cmd->add_option("z", z_text, "Supernatural literal, e.g. 2^4*5^2*7^inf")->required();
  equiv_cmd->add_option("z_prime", z_prime_text, "Supernatural literal")->required();
  equiv_cmd->add_option("--search-bound", search_bound, "Height bound of the witness parameter search")
      ->capture_default_str();
  auto* apply_cmd = ext_cmd->add_subcommand("apply", "Apply a Moebius matrix \"a,b;c,d\" to a supernatural number");
  std::string g_text, apply_z;
  apply_cmd->add_option("matrix", g_text, "Moebius matrix literal with rational entries")->required();
  apply_cmd->add_option("z", apply_z, "Supernatural literal")->required();
  auto* member_cmd = ext_cmd->add_subcommand("member", "Test whether (u, v) lies in A_x for x = (s z; 0 s')");
  std::string s_text = "1", s_prime_text = "0", member_z, u_text, v_text;
  member_cmd->add_option("z", member_z, "Supernatural literal")->required();
  member_cmd->add_option("u", u_text, "Rational")->required();
  member_cmd->add_option("v", v_text, "Rational")->required();
  member_cmd->add_option("--s", s_text, "Top-left entry")->capture_default_str();
  member_cmd->add_option("--s-prime", s_prime_text, "Bottom-right entry")->capture_default_str();

  auto* goor_cmd = app.add_subcommand("goormaghtigh", "Repunit collisions (x^n-1)/(x-1) = (y^m-1)/(y-1)");
  std::uint64_t bound = 0;
  std::string goor_format = "csv";
  goor_cmd->add_option("--bound", bound, "Largest value searched")->required()->check(CLI::PositiveNumber);
  goor_cmd->add_option("--format", goor_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  goor_cmd->add_flag("--header", header, "Print a CSV header line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hnf_cmd) return cmd_hnf(hnf_matrix);
    if (*dist_cmd) return cmd_dist(dist_x, dist_y);
    if (*ball_cmd) return cmd_ball(ball_center, radius, ball_format);
    if (*zeta_cmd) return cmd_zeta(which, terms, mode, zeta_format, header);
    if (*equiv_cmd) return cmd_ext_equiv(z_text, z_prime_text, search_bound);
    if (*apply_cmd) return cmd_ext_apply(g_text, apply_z);
    if (*member_cmd) return cmd_ext_member(s_text, member_z, s_prime_text, u_text, v_text);
    if (*goor_cmd) return cmd_goormaghtigh(bound, goor_format, header);
  } catch (const DomainError& e) {
    json out;
    out["error"] = e.name();
    if (const auto* pe = dynamic_cast<const PrimeDomainError*>(&e)) out["prime"] = int_json(pe->prime());
    out["message"] = e.what();
    emit(out);
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
