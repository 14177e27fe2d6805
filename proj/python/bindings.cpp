#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "toruszeta/cli.hpp"
#include "toruszeta/oracle.hpp"
#include "toruszeta/zeta_core.hpp"

namespace py = pybind11;
using namespace toruszeta;

namespace {

// Python ints cross the boundary as decimal strings so nothing is truncated.
Integer to_integer(const py::handle& value) {
    return Integer(py::str(value).cast<std::string>());
}

py::int_ to_py(const Integer& value) {
    const std::string digits = value.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

IntMatrix to_matrix(const py::sequence& rows) {
    const std::size_t n = py::len(rows);
    if (n == 0) {
        throw py::value_error("empty matrix");
    }
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const py::sequence row = rows[i];
        if (py::len(row) != n) {
            throw py::value_error("matrix must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = to_integer(row[j]);
        }
    }
    return m;
}

py::tuple to_py(const RatFunc& f) {
    return py::make_tuple(to_py(f.num().coeffs()), to_py(f.den().coeffs()));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Dynamical zeta functions of integer matrices acting on the torus";

    mod.def("parse_matrix", [](const std::string& text) {
        const IntMatrix m = cli::parse_matrix(text);
        py::list rows;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            py::list row;
            for (std::size_t j = 0; j < m.dim(); ++j) row.append(to_py(m(i, j)));
            rows.append(row);
        }
        return rows;
    });
    mod.def("characteristic_polynomial", [](const py::sequence& m) {
        return to_py(characteristic_polynomial(to_matrix(m)).coeffs());
    });
    mod.def("lefschetz_zeta", [](const py::sequence& m) { return to_py(lefschetz_zeta(to_matrix(m))); });
    mod.def("artin_mazur_zeta", [](const py::sequence& m) { return to_py(artin_mazur_zeta(to_matrix(m))); });
    mod.def("render_zeta", [](const py::sequence& m, bool latex) {
        return cli::render_ratfunc(artin_mazur_zeta(to_matrix(m)), latex ? cli::Style::Latex : cli::Style::Plain);
    }, py::arg("m"), py::arg("latex") = false);
    mod.def("signed_count", [](const py::sequence& m, unsigned long k) { return to_py(signed_count(to_matrix(m), k)); });
    mod.def("isolated_fixed_count", [](const py::sequence& m, unsigned long k) {
        return to_py(isolated_fixed_count(to_matrix(m), k));
    });
    mod.def("snf_fixed_count", [](const py::sequence& m, unsigned long k) {
        return to_py(oracle::snf_fixed_count(to_matrix(m), k));
    });
    mod.def("signs", [](const py::sequence& m) {
        const SignData s = signs(to_matrix(m));
        py::dict out;
        out["sigma"] = s.sigma;
        out["tau"] = s.tau;
        out["delta"] = s.delta;
        out["epsilon"] = s.epsilon;
        return out;
    });
    mod.def("euler_exponents", [](const py::sequence& m, std::size_t n) {
        return to_py(euler_exponents(to_matrix(m), n));
    });
    mod.def("growth_rate", [](const py::sequence& m, double tolerance) -> py::object {
        const auto rate = growth_rate(to_matrix(m), tolerance);
        if (!rate) return py::none();
        return py::make_tuple(rate->value, rate->error_bound);
    }, py::arg("m"), py::arg("tolerance") = kDefaultTolerance);
    mod.def("functional_equation_holds", [](const py::sequence& m) {
        return functional_equation_check(to_matrix(m)).holds();
    });
    mod.def("report_json", [](const py::sequence& m, std::size_t max_m, double tolerance) {
        return cli::report_to_json(make_report(to_matrix(m), max_m, tolerance)).dump();
    }, py::arg("m"), py::arg("max_m") = 10, py::arg("tolerance") = kDefaultTolerance);

    py::register_exception<cli::ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<InternalError>(mod, "InternalError", PyExc_RuntimeError);
}
