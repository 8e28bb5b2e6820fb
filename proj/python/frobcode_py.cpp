// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobcode/cli.hpp"
#include "frobcode/error.hpp"
#include "frobcode/report.hpp"

namespace py = pybind11;
using namespace frobcode;

namespace {

using Rows = std::vector<std::vector<std::string>>;

WeightTablePtr weights_for(const std::string& ring, const std::string& gamma) {
    const RingPtr r = build_ring(ring);
    return hom_weight_table(r, gamma == "preset" ? preset_gamma(r->spec()) : Rational::parse(gamma));
}

LinearCode code_for(const std::string& ring, const Rows& rows, const std::string& gamma) {
    const WeightTablePtr t = weights_for(ring, gamma);
    Matrix g;
    for (const auto& row : rows) {
        Word w;
        for (const std::string& lit : row) w.push_back(t->ring().parse_element(lit));
        if (!g.empty() && w.size() != g.front().size()) throw Error(Errc::dimension_mismatch, "ragged generator rows");
        g.push_back(std::move(w));
    }
    return build_code(t, g);
}

}  // namespace

PYBIND11_MODULE(_frobcode, m) {
    m.doc() = "Exact homogeneous weights and bounds for linear codes over finite Frobenius rings";
    m.attr("__version__") = kToolVersion;

    static py::exception<Error> error_type(m, "FrobcodeError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("canonical_ring", [](const std::string& spec) { return parse_ring_spec(spec).str(); },
          py::arg("spec"));

    m.def("weights",
          [](const std::string& ring, const std::string& gamma) {
              const WeightTablePtr t = weights_for(ring, gamma);
              std::vector<std::pair<std::string, std::string>> out;
              for (Element x = 0; x < t->ring().size(); ++x) out.emplace_back(t->ring().label(x), t->weight(x).str());
              return out;
          },
          py::arg("ring"), py::arg("gamma") = "1", "(label, weight) pairs in element order; weights as p/q strings");

    m.def("parameters_json",
          [](const std::string& ring, const Rows& rows, const std::string& gamma) {
              return to_json(CodeParameters::of(code_for(ring, rows, gamma))).dump();
          },
          py::arg("ring"), py::arg("rows"), py::arg("gamma") = "1");

    m.def("bounds_json",
          [](const std::string& ring, const Rows& rows, const std::string& gamma) {
              const LinearCode code = code_for(ring, rows, gamma);
              return to_json(check_all(code), code.ring()).dump();
          },
          py::arg("ring"), py::arg("rows"), py::arg("gamma") = "1");

    m.def("report_json",
          [](const std::string& ring, const Rows& rows, const std::string& gamma, bool chain) {
              return to_json(make_report(code_for(ring, rows, gamma), chain)).dump();
          },
          py::arg("ring"), py::arg("rows"), py::arg("gamma") = "1", py::arg("chain") = true);

    m.def("family_json",
          [](const std::string& name, const std::string& ring, std::size_t dim) {
              if (name == "octacode") return to_json(make_report(octacode(), true)).dump();
              const WeightTablePtr t = hom_weight_table(build_ring(ring));
              if (name == "simplex") return to_json(make_report(simplex(t, dim), true)).dump();
              if (name == "hjelmslev") return to_json(make_report(hjelmslev_line(t), true)).dump();
              throw Error(Errc::invalid_spec, "unknown family " + name);
          },
          py::arg("name"), py::arg("ring") = "Z4", py::arg("m") = 1);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int status = run_cli(args, out, err);
              return py::make_tuple(status, out.str(), err.str());
          },
          py::arg("args"), "Runs the command line in-process; returns (status, stdout, stderr).");
}
