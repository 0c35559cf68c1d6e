#include <optional>
#include <string>
#include <utility>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exls/e16k16.hpp"
#include "exls/embeddings.hpp"
#include "exls/errors.hpp"
#include "exls/repn.hpp"
#include "exls/suites.hpp"
#include "exls/tables.hpp"
#include "exls/vfalgebras.hpp"

namespace py = pybind11;
using namespace exls;

namespace {

std::optional<Coord> coord_of(const std::string &s) {
    if (s.empty()) return std::nullopt;
    if (s == "rho") return Coord::Rho;
    if (s == "xieta") return Coord::XiEta;
    throw std::invalid_argument("coords must be 'rho' or 'xieta'");
}

template <typename Elt>
void common(py::class_<Elt> &c) {
    c.def("__str__", &Elt::str)
        .def("__repr__", [](const Elt &e) { return "<" + e.str() + ">"; })
        .def("__eq__", [](const Elt &a, const Elt &b) { return a.agrees_with(b); })
        .def("__add__", [](const Elt &a, const Elt &b) { return a + b; })
        .def("__sub__", [](const Elt &a, const Elt &b) { return a - b; })
        .def("__rmul__", [](const Elt &a, long s) { return Scalar(s) * a; })
        .def("is_zero", &Elt::is_zero);
}

}  // namespace

PYBIND11_MODULE(_exls, m) {
    m.doc() = "Brackets, embeddings and verification suites for E(5,10), E(4,4), E(1,6) and K(1,6)";

    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);
    py::register_exception<HeadroomError>(m, "HeadroomError", PyExc_ArithmeticError);

    py::class_<E510Elt> e510(m, "E510");
    e510.def(py::init([](const std::string &s) { return parse_e510(s); }), py::arg("text"));
    common(e510);
    py::class_<E44Elt> e44(m, "E44");
    e44.def(py::init([](const std::string &s) { return parse_e44(s); }), py::arg("text"));
    common(e44);
    py::class_<E16Elt> e16(m, "E16");
    e16.def(py::init([](const std::string &s) { return parse_e16(s); }), py::arg("text"));
    common(e16);
    py::class_<K16Elt> k16(m, "K16");
    k16.def(py::init([](const std::string &s, const std::string &coords) { return parse_k16(s, coord_of(coords)); }),
            py::arg("text"), py::arg("coords") = "");
    k16.def("__str__", [](const K16Elt &f) { return f.str(); })
        .def("__repr__", [](const K16Elt &f) { return "<" + f.str() + ">"; })
        .def("__eq__", [](const K16Elt &a, const K16Elt &b) { return a == b; })
        .def("__add__", [](const K16Elt &a, const K16Elt &b) { return a + b; })
        .def("__sub__", [](const K16Elt &a, const K16Elt &b) { return a - b; })
        .def("__rmul__", [](const K16Elt &a, long s) { return Scalar(s) * a; })
        .def("is_zero", &K16Elt::is_zero)
        .def("truncated", [](K16Elt f, int t) {
            f.truncate(t);
            return f;
        });

    m.def("bracket", [](const E510Elt &a, const E510Elt &b) { return bracket_e510(a, b); });
    m.def("bracket", [](const E44Elt &a, const E44Elt &b) { return bracket_e44(a, b); });
    m.def("bracket", [](const E16Elt &a, const E16Elt &b) { return bracket_e16(a, b); });
    m.def("bracket", [](const K16Elt &a, const K16Elt &b) { return bracket_k16(a, b); });

    m.def("op_A", &op_A);
    m.def("op_iota", &op_iota);
    m.def("psi", &psi);
    m.def("psi_inverse", &psi_inverse);
    m.def("Psi", [](const K16Elt &F, int window) { return PsiMap(window)(F); }, py::arg("F"), py::arg("window") = 2);

    m.def("degree_e16_principal", &degree_e16_principal);
    m.def("degree_k16_principal", &degree_k16_principal);
    m.def("degree_e44_principal", &degree_e44_principal);
    m.def("degree_510", [](const E510Elt &e, std::array<int, 5> type) { return degree_510(e, GradingType510(type)); });

    m.def("enumerate_slice", [](int r, int k) { return enumerate_slice(r, k).basis; });
    m.def("weight_of", [](const E510Elt &v) {
        WeightVec w = weight_of(v);
        return py::make_tuple(w.a, w.b, w.c, w.d.str());
    });
    m.def("annihilated_by_negative", &annihilated_by_negative);
    m.def("v_r", &v_r);

    m.def("suite_names", &suite_names);
    m.def(
        "verify_json",
        [](const std::string &name, std::uint64_t seed, long trials, std::optional<int> twindow,
           std::optional<std::pair<int, int>> n, bool quick) {
            SuiteOptions o;
            o.seed = seed;
            o.trials = trials;
            o.twindow = twindow;
            o.n = n;
            o.quick = quick;
            py::gil_scoped_release release;
            return run_suite(name, o).to_json();
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 500, py::arg("twindow") = py::none(),
        py::arg("n") = py::none(), py::arg("quick") = false);
    m.def("table", [](const std::string &name, const std::string &format) {
        TextTable t = make_table(name);
        return format == "json" ? render_json(t) : render_markdown(t);
    }, py::arg("name"), py::arg("format") = "md");
}
