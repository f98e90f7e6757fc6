#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "bigpic/bigpicture.hpp"
#include "bigpic/errors.hpp"
#include "bigpic/lattice.hpp"
#include "bigpic/literals.hpp"
#include "bigpic/local_poset.hpp"
#include "bigpic/supernatural.hpp"
#include "bigpic/zeta.hpp"

namespace py = pybind11;
using namespace bigpic;

namespace {

// Python ints cross the boundary as decimal strings, so sizes are unbounded.
Int to_int(const py::int_& x) { return Int(py::str(x).cast<std::string>(), 10); }

py::int_ from_int(const Int& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object from_rational(const Rational& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_int(q.get_num()), from_int(q.get_den()));
}

using Triple = std::tuple<py::int_, py::int_, py::int_>;

MatrixClass to_class(const Triple& t) {
  return MatrixClass::from_canonical(to_int(std::get<0>(t)), to_int(std::get<1>(t)), to_int(std::get<2>(t)));
}

Triple from_class(const MatrixClass& m) { return {from_int(m.a()), from_int(m.b()), from_int(m.d())}; }

LocalClass to_local(const py::int_& p, unsigned long k, unsigned long l, const py::int_& z) {
  return LocalClass::finite(to_int(p), k, l, to_int(z));
}

py::tuple from_local(const LocalClass& x) {
  return py::make_tuple(x.k.value(), x.l.value(), from_int(x.z));
}

std::vector<py::int_> column(const CoefficientTable& t) {
  std::vector<py::int_> out;
  out.reserve(t.size());
  for (const auto& c : t.coeffs) out.push_back(from_int(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_bigpic, m) {
  m.doc() = "Exact computations on 2x2 integer matrix classes, the big picture and extensions of Q by Z";

  static py::exception<DomainError> domain_error(m, "DomainError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(domain_error.ptr())(e.what());
      exc.attr("name") = e.name();
      if (const auto* pe = dynamic_cast<const PrimeDomainError*>(&e)) exc.attr("prime") = from_int(pe->prime());
      PyErr_SetObject(domain_error.ptr(), exc.ptr());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // Matrix classes as canonical triples (a, b, d).
  m.def(
      "hnf",
      [](const py::int_& a11, const py::int_& a12, const py::int_& a21, const py::int_& a22) {
        return from_class(hnf({to_int(a11), to_int(a12), to_int(a21), to_int(a22)}));
      },
      py::arg("a11"), py::arg("a12"), py::arg("a21"), py::arg("a22"),
      "Hermite normal form (a, b, d) of [[a11, a12], [a21, a22]].");
  m.def(
      "hnf_literal", [](const std::string& s) { return from_class(hnf(parse_matrix(s))); }, py::arg("matrix"),
      "Hermite normal form of a literal \"a,b;c,d\".");
  m.def(
      "divides", [](const Triple& x, const Triple& y) { return divides(to_class(x), to_class(y)); }, py::arg("x"),
      py::arg("y"));
  m.def(
      "meet", [](const Triple& x, const Triple& y) { return from_class(meet(to_class(x), to_class(y))); },
      py::arg("x"), py::arg("y"));
  m.def(
      "join", [](const Triple& x, const Triple& y) { return from_class(join(to_class(x), to_class(y))); },
      py::arg("x"), py::arg("y"));
  m.def(
      "level", [](const Triple& x, const py::int_& p) { return level(to_class(x), to_int(p)); }, py::arg("x"),
      py::arg("p"));
  m.def(
      "niveau", [](const Triple& x, const py::int_& p) { return niveau(to_class(x), to_int(p)); }, py::arg("x"),
      py::arg("p"));
  m.def(
      "primitive_decompose",
      [](const Triple& x) {
        const auto d = primitive_decompose(to_class(x));
        return py::make_tuple(from_int(d.scalar), from_class(d.primitive));
      },
      py::arg("x"));
  m.def(
      "hyper_distance",
      [](const Triple& x, const Triple& y) { return from_int(hyper_distance(to_class(x), to_class(y))); },
      py::arg("x"), py::arg("y"));

  // p-local classes as (k, l, z).
  m.def(
      "localize", [](const Triple& x, const py::int_& p) { return from_local(localize(to_class(x), to_int(p))); },
      py::arg("x"), py::arg("p"));
  m.def(
      "upward_neighbors",
      [](const py::int_& p, unsigned long k, unsigned long l, const py::int_& z) {
        py::list out;
        for (const auto& y : upward_neighbors(to_local(p, k, l, z))) out.append(from_local(y));
        return out;
      },
      py::arg("p"), py::arg("k"), py::arg("l"), py::arg("z"));
  m.def(
      "downward_neighbors",
      [](const py::int_& p, unsigned long k, unsigned long l, const py::int_& z) {
        py::list out;
        for (const auto& y : downward_neighbors(to_local(p, k, l, z))) out.append(from_local(y));
        return out;
      },
      py::arg("p"), py::arg("k"), py::arg("l"), py::arg("z"));
  m.def(
      "classify",
      [](const py::int_& p, unsigned long k, unsigned long l, const py::int_& z) {
        return to_string(classify(to_local(p, k, l, z)));
      },
      py::arg("p"), py::arg("k"), py::arg("l"), py::arg("z"));
  m.def(
      "neighbor_census",
      [](const py::int_& p, unsigned long k, unsigned long l, const py::int_& z) {
        const auto c = neighbor_census(to_local(p, k, l, z));
        return py::make_tuple(c.up_same_level, c.up_level_raising, c.down_same_level, c.down_level_lowering);
      },
      py::arg("p"), py::arg("k"), py::arg("l"), py::arg("z"));

  // Big picture vertices as literals "M=num/den,r=g/h".
  m.def(
      "embed", [](const std::string& v) { return from_class(embed(parse_vertex(v))); }, py::arg("vertex"));
  m.def(
      "unembed",
      [](const Triple& x) {
        const auto v = unembed(to_class(x));
        return py::make_tuple(from_rational(v.M()), from_rational(v.r()));
      },
      py::arg("x"));
  m.def(
      "delta", [](const std::string& x, const std::string& y) { return from_int(delta(parse_vertex(x), parse_vertex(y))); },
      py::arg("x"), py::arg("y"));
  m.def(
      "delta_direct",
      [](const std::string& x, const std::string& y) {
        return from_int(delta_direct(parse_vertex(x), parse_vertex(y)));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "ball_dot", [](const std::string& c, const py::int_& r) { return export_dot(ball(parse_vertex(c), to_int(r))); },
      py::arg("center"), py::arg("radius"));
  m.def(
      "ball_json",
      [](const std::string& c, const py::int_& r) { return export_json(ball(parse_vertex(c), to_int(r))); },
      py::arg("center"), py::arg("radius"));

  // Dirichlet coefficients.
  m.def("sigma_coeffs", [](std::size_t n) { return column(sigma_coeffs(n)); }, py::arg("n"));
  m.def("count_classes_by_det", [](std::size_t n) { return column(count_classes_by_det(n)); }, py::arg("n"));
  m.def("psi_coeffs", [](std::size_t n) { return column(psi_coeffs(n)); }, py::arg("n"));
  m.def("count_primitive_by_det", [](std::size_t n) { return column(count_primitive_by_det(n)); }, py::arg("n"));
  m.def("axpb_count", [](std::size_t n) { return column(axpb_count(n)); }, py::arg("n"));

  // Supernatural numbers as literals "2^4*5^2*7^inf".
  m.def(
      "normalize_supernatural", [](const std::string& z) { return to_string(parse_supernatural(z)); }, py::arg("z"));
  m.def(
      "moebius_apply",
      [](const std::string& g, const std::string& z) {
        return to_string(moebius_apply(parse_moebius(g), parse_supernatural(z)));
      },
      py::arg("matrix"), py::arg("z"));
  m.def(
      "equiv_decide",
      [](const std::string& z, const std::string& z_prime, unsigned long search_bound) {
        EquivOptions opt;
        opt.search_bound = search_bound;
        const auto v = equiv_decide(parse_supernatural(z), parse_supernatural(z_prime), opt);
        py::dict out;
        if (const auto* e = std::get_if<Equivalent>(&v)) {
          out["verdict"] = "Equivalent";
          const auto& w = e->witness;
          out["witness"] = py::make_tuple(py::make_tuple(from_rational(w.a()), from_rational(w.b())),
                                          py::make_tuple(from_rational(w.c()), from_rational(w.d())));
        } else if (const auto* n = std::get_if<NotEquivalent>(&v)) {
          out["verdict"] = "NotEquivalent";
          out["reason"] = to_string(n->reason);
        } else {
          out["verdict"] = "Indeterminate";
          out["solution_space_dim"] = std::get<Indeterminate>(v).solution_space_dim;
        }
        return out;
      },
      py::arg("z"), py::arg("z_prime"), py::arg("search_bound") = 50);
  m.def(
      "ext_member",
      [](const std::string& z, const std::string& u, const std::string& v, const std::string& s,
         const std::string& s_prime) {
        const ExtMatrix x{parse_supernatural(s), parse_supernatural(z), parse_supernatural(s_prime)};
        return ext_membership(x, parse_rational(u), parse_rational(v));
      },
      py::arg("z"), py::arg("u"), py::arg("v"), py::arg("s") = "1", py::arg("s_prime") = "0");
  m.def(
      "is_extension",
      [](const std::string& s, const std::string& z, const std::string& s_prime) {
        return is_extension({parse_supernatural(s), parse_supernatural(z), parse_supernatural(s_prime)});
      },
      py::arg("s"), py::arg("z"), py::arg("s_prime"));
  m.def(
      "goormaghtigh_search",
      [](std::uint64_t bound) {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> out;
        for (const auto& r : goormaghtigh_search(bound)) out.emplace_back(r.x, r.y, r.n, r.m, r.value);
        return out;
      },
      py::arg("bound"));
}
