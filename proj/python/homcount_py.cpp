// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homcount/json_io.hpp"
#include "homcount/oracle.hpp"

namespace py = pybind11;
namespace hc = homcount;

namespace {

py::object py_bigint(const hc::BigInt& x) {
    std::string s = x.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

hc::BigInt bigint_from_py(const py::object& obj) {
    return hc::big_from_string(py::str(obj).cast<std::string>());
}

py::list py_coeffs(const hc::RatPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) {
        if (hc::rat_is_integer(c))
            out.append(py_bigint(c.get_num()));
        else
            out.append(py::str(hc::rat_to_string(c)));
    }
    return out;
}

// Validated spec plus its assembled counting data.
struct PySpec {
    hc::SpecFile file;
    hc::HomogeneousSpec spec;
    hc::CountingResult result;

    explicit PySpec(hc::SpecFile f)
        : file(std::move(f)),
          spec(hc::HomogeneousSpec::validate(file.raw)),
          result(hc::count_all(spec)) {}
};

}  // namespace

PYBIND11_MODULE(_homcount, m) {
    m.doc() = "Exact counting polynomials for homogeneous spaces over finite fields";

    py::register_exception<hc::Error>(m, "Error");

    py::class_<PySpec>(m, "Spec")
        .def(py::init([](const std::string& text) {
                 return PySpec(hc::parse_spec_text(text));
             }),
             py::arg("json_text"))
        .def_static(
            "from_file",
            [](const std::string& path) { return PySpec(hc::load_spec_file(path)); },
            py::arg("path"))
        .def_property_readonly("name", [](const PySpec& s) { return s.file.meta.name; })
        .def_property_readonly("period", [](const PySpec& s) { return s.result.period; })
        .def_property_readonly("minimal_period",
                               [](const PySpec& s) { return s.result.minimal_period; })
        .def_property_readonly("dim", [](const PySpec& s) { return s.result.dim_x; })
        .def(
            "polynomial",
            [](const PySpec& s, int residue) { return py_coeffs(s.spec.polynomial(residue)); },
            py::arg("residue") = 0,
            "Ascending coefficients of the residue-class counting polynomial")
        .def(
            "count",
            [](const PySpec& s, const py::object& q, int n) {
                return py_bigint(hc::count_at(s.spec, bigint_from_py(q), n));
            },
            py::arg("q"), py::arg("n") = 1, "Exact number of points over F_{q^n}")
        .def("factorization",
             [](const PySpec& s) {
                 return py::make_tuple(s.result.factorization.r,
                                       py_coeffs(s.result.factorization.q_x));
             })
        .def(
            "shifted",
            [](const PySpec& s, int residue) {
                int r = ((residue % s.result.period) + s.result.period) % s.result.period;
                return py_coeffs(s.result.shifted[static_cast<std::size_t>(r)]);
            },
            py::arg("residue") = 0, "Coefficients of P_r(t + 1)")
        .def("result_json",
             [](const PySpec& s) { return hc::result_to_json(s.result).dump(); });

    m.def(
        "period_bound",
        [](int rank) { return py_bigint(hc::period_bound(rank)); }, py::arg("rank"),
        "lcm of all n with euler_phi(n) <= rank");

    m.def(
        "replay_trace",
        [](const std::string& json_text) {
            hc::Json j = hc::Json::parse(json_text);
            return py_coeffs(hc::replay(hc::trace_from_json(j)));
        },
        py::arg("json_text"), "Replay a reduction trace and return the final coefficients");

    auto oracle = m.def_submodule("oracle", "Brute-force enumeration oracles");
    oracle.def(
        "conic_count",
        [](long q, long a, long b) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(q);
            return hc::oracle::conic_count(a, b, f);
        },
        py::arg("q"), py::arg("a"), py::arg("b"));
    oracle.def(
        "flag_count",
        [](long q, int n, const std::vector<int>& dims) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(q);
            return hc::oracle::flag_count(f, n, dims);
        },
        py::arg("q"), py::arg("n"), py::arg("dims"));
    oracle.def(
        "p1_pair_count",
        [](long q, const std::string& mode) {
            hc::oracle::SmallField f = hc::oracle::SmallField::of_order(q);
            hc::require(mode == "ordered" || mode == "unordered_variety", "domain",
                        "mode must be 'ordered' or 'unordered_variety'");
            return hc::oracle::p1_pair_count(f, mode == "ordered"
                                                    ? hc::oracle::PairMode::Ordered
                                                    : hc::oracle::PairMode::UnorderedVariety);
        },
        py::arg("q"), py::arg("mode") = "ordered");
    oracle.def(
        "twisted_torus_count",
        [](const std::vector<std::vector<long>>& a, long q, int split_degree) {
            return hc::oracle::twisted_torus_count(hc::IntMatrix::from_ints(a), q,
                                                   split_degree);
        },
        py::arg("a"), py::arg("q"), py::arg("split_degree"));
    oracle.def(
        "glr_closed_form",
        [](int r, const py::object& q) {
            return py_bigint(hc::oracle::glr_closed_form(r, bigint_from_py(q)));
        },
        py::arg("r"), py::arg("q"));
}
