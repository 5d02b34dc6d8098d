#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jset/characters.hpp"
#include "jset/eisenstein.hpp"
#include "jset/errors.hpp"
#include "jset/json_io.hpp"
#include "jset/padic.hpp"
#include "jset/shooting.hpp"

namespace py = pybind11;
using namespace jset;

namespace {

std::vector<Entry> to_entries(const std::vector<std::pair<i64, int>>& v) {
  std::vector<Entry> out;
  for (auto [i, b] : v) out.push_back({i, b});
  return out;
}

std::map<std::string, std::string> masses(const Distribution& d) {
  std::map<std::string, std::string> out;
  for (const auto& [js, m] : d.mass) out[to_string(js)] = rational_string(m);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "jump sets, shooting games and Eisenstein towers";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  static PyObject* precision_error =
      PyErr_NewException("jset._core.PrecisionError", PyExc_ArithmeticError, nullptr);
  m.add_object("PrecisionError", py::handle(precision_error));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PrecisionError& e) {
      py::object inst = py::reinterpret_borrow<py::object>(precision_error)(py::str(e.what()));
      inst.attr("required") = e.required();
      PyErr_SetObject(precision_error, inst.ptr());
    }
  });

  py::class_<Shift>(m, "Shift")
      .def_static("rho_ep", &Shift::rho_ep, py::arg("p"), py::arg("e"))
      .def_static("rho_inf", &Shift::rho_inf, py::arg("p"))
      .def_static("abstract", &Shift::abstract, py::arg("table"), py::arg("tail"))
      .def("__call__", &Shift::operator())
      .def("iterate", &Shift::iterate)
      .def("v_rho", &Shift::v_rho)
      .def("root", &Shift::root)
      .def("hops_to_reach", &Shift::hops_to_reach)
      .def("tset", &Shift::tset, py::arg("bound") = 0)
      .def_property_readonly("e_star", &Shift::e_star)
      .def_property_readonly("e_prime", &Shift::e_prime)
      .def_property_readonly("p", &Shift::p)
      .def_property_readonly("e", &Shift::e)
      .def(py::self == py::self)
      .def("__repr__", &Shift::describe);

  py::class_<JumpSet>(m, "JumpSet")
      .def(py::init([](const Shift& s, const std::vector<std::pair<i64, int>>& entries, bool extended) {
             return make_jumpset(s, extended, to_entries(entries));
           }),
           py::arg("shift"), py::arg("entries"), py::arg("extended") = true)
      .def_readonly("shift", &JumpSet::shift)
      .def_readonly("extended", &JumpSet::extended)
      .def_property_readonly("entries",
                             [](const JumpSet& j) {
                               std::vector<std::pair<i64, int>> out;
                               for (const auto& e : j.entries) out.emplace_back(e.i, e.beta);
                               return out;
                             })
      .def("beta", &JumpSet::beta)
      .def("subset", [](const JumpSet& j) { return to_subset(j); })
      .def("is_admissible", [](const JumpSet& j) { return is_admissible(j); })
      .def("to_json", [](const JumpSet& j) { return jumpset_to_json(j).dump(); })
      .def(py::self == py::self)
      .def("__hash__", [](const JumpSet& j) { return py::hash(py::str(to_string(j))); })
      .def("__repr__", [](const JumpSet& j) { return to_string(j); });

  m.def("jumpset_from_json", [](const std::string& s) { return jumpset_from_json(json::parse(s)); });
  m.def("from_subset", &from_subset, py::arg("shift"), py::arg("extended"), py::arg("subset"));
  m.def(
      "extract",
      [](const Shift& s, const std::vector<std::pair<i64, int>>& pts, bool maximal, bool extended) {
        std::vector<Point> g;
        for (auto [a, b] : pts) g.push_back({a, b});
        return extract(s, extended, g, maximal ? Which::Maximal : Which::Minimal);
      },
      py::arg("shift"), py::arg("points"), py::arg("maximal") = false, py::arg("extended") = true);
  m.def("enumerate", &enumerate, py::arg("shift"), py::arg("extended") = true, py::arg("beta_bound") = 0,
        py::arg("admissible_only") = false);

  m.def("is_compatible", &is_compatible, py::arg("candidate"), py::arg("module"), py::arg("f"), py::arg("p"));
  m.def("is_adequate", &is_adequate, py::arg("candidate"), py::arg("module"), py::arg("f"), py::arg("p"));
  m.def("character_family", &character_jumpset_family, py::arg("shift"), py::arg("module"), py::arg("f"),
        py::arg("p"), py::arg("bound"));

  m.def(
      "exact_distribution",
      [](const Shift& s, int p, i64 q, std::optional<i64> start) {
        GameParams g{s, q, p, true};
        return masses(exact_distribution(g, start.value_or(s.e_prime())));
      },
      py::arg("shift"), py::arg("p"), py::arg("q"), py::arg("start") = py::none());
  m.def(
      "haar_distribution", [](const Shift& s, int p, int f) { return masses(haar_distribution(s, p, f)); },
      py::arg("shift"), py::arg("p"), py::arg("f"));
  m.def(
      "simulate_counts",
      [](const Shift& s, int p, i64 q, long n, std::uint64_t seed) {
        std::map<std::string, long> out;
        for (const auto& [js, c] : simulate_counts(GameParams{s, q, p, true}, s.e_prime(), n, seed))
          out[to_string(js)] = c;
        return out;
      },
      py::arg("shift"), py::arg("p"), py::arg("q"), py::arg("n"), py::arg("seed") = 1);
  m.def("split_seed", &Rng::split);

  m.def(
      "field_jump_set",
      [](const std::string& poly_json, int p, int f, int j, int precision) {
        BaseRing b(p, f, j, precision);
        auto g = polynomial_from_json(b, json::parse(poly_json));
        return field_jump_set(Tower(p, f, j, g, precision));
      },
      py::arg("g_json"), py::arg("p"), py::arg("f"), py::arg("j"), py::arg("precision"));
  m.def("default_oracle_precision", &default_oracle_precision);
  m.def(
      "shape_jump_set",
      [](const std::string& shape_json) {
        auto r = jump_set_of_shape(shape_from_json(json::parse(shape_json)));
        return py::make_tuple(r.field ? py::cast(*r.field) : py::none(), r.strongly_separable, r.routes_agree);
      },
      py::arg("shape_json"));
  m.def(
      "ramification_polygon", [](const JumpSet& js, int n, int j) { return ramification_polygon(js, n, j).vertices; },
      py::arg("jumpset"), py::arg("n"), py::arg("j") = 0);
  m.def(
      "realize",
      [](const JumpSet& js, int f) {
        auto r = realize(js, f);
        BaseRing b(js.shift.p(), f, r.shape.j, r.precision);
        return polynomial_to_json(b, r.g).dump();
      },
      py::arg("jumpset"), py::arg("f") = 1);
  m.def("tame_transform", &tame_transform, py::arg("jumpset"), py::arg("d"));
  m.def(
      "extension_constraints",
      [](const JumpSet& a, i64 d, const JumpSet& b) {
        auto r = extension_constraints(a, d, b);
        return py::make_tuple(r.ok, r.lines);
      },
      py::arg("js1"), py::arg("d"), py::arg("js2"));
}
