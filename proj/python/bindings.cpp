// Python bindings: thin wrappers that speak in plain Python types (nested
// lists for matrices, dicts mirroring the JSON reports, arbitrary-precision
// ints via string round-trip).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hadsimplex/absorption.hpp"
#include "hadsimplex/ball_norm.hpp"
#include "hadsimplex/bounds.hpp"
#include "hadsimplex/cube_norm.hpp"
#include "hadsimplex/errors.hpp"
#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/report.hpp"
#include "hadsimplex/simplex.hpp"
#include "hadsimplex/version.hpp"

namespace py = pybind11;
using namespace hadsimplex;

namespace {

HadamardMatrix to_matrix(const std::vector<std::vector<int>>& rows) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::int8_t> entries;
    entries.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m)
            throw MalformedMatrixError("matrix rows must form a square");
        for (int v : row) entries.push_back(static_cast<std::int8_t>(v));
    }
    return HadamardMatrix(m, std::move(entries));
}

std::vector<std::vector<int>> from_matrix(const HadamardMatrix& h) {
    std::vector<std::vector<int>> rows(h.order(), std::vector<int>(h.order()));
    for (int r = 0; r < h.order(); ++r)
        for (int c = 0; c < h.order(); ++c) rows[r][c] = h.at(r, c);
    return rows;
}

py::object big_to_py(const std::string& decimal) {
    PyObject* v = PyLong_FromString(decimal.c_str(), nullptr, 10);
    if (v == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(v);
}

// Recursive JSON -> Python value conversion, so every report dict in Python
// matches the CLI's --json output key for key.
py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items())
            out[py::str(key)] = json_to_py(value);
        return out;
    }
    default: return py::none();
    }
}

ScanOptions scan_options(int workers) {
    ScanOptions opts;
    opts.workers = workers;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Regular simplices from Hadamard matrices: projector norms on "
              "the cube, absorption indices, ball norms, determinant bounds";
    m.attr("__version__") = kVersion;

    // Input problems map to ValueError, violated mathematical relations to
    // RuntimeError (mirroring the CLI's exit codes 2 and 1).
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvariantViolationError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("sylvester",
          [](int k) { return from_matrix(sylvester(k)); },
          py::arg("k"),
          "Hadamard matrix of order 2^k by repeated doubling.");
    m.def("paley",
          [](int q) { return from_matrix(paley(q)); },
          py::arg("q"),
          "Hadamard matrix of order q+1 from quadratic residues mod q "
          "(q prime, q % 4 == 3).");
    m.def("try_construct",
          [](int order) -> py::object {
              const auto h = try_construct(order);
              if (!h) return py::none();
              return py::cast(from_matrix(*h));
          },
          py::arg("order"),
          "Hadamard matrix of the given order, or None when the built-in "
          "constructions miss it.");
    m.def("is_hadamard",
          [](const std::vector<std::vector<int>>& rows) {
              return is_hadamard(to_matrix(rows));
          },
          py::arg("rows"));
    m.def("normalize_last_column",
          [](const std::vector<std::vector<int>>& rows) {
              return from_matrix(normalize_last_column(to_matrix(rows)));
          },
          py::arg("rows"),
          "Negate rows whose last entry is -1 (an equivalent matrix).");
    m.def("parse_matrix",
          [](const std::string& text) {
              return from_matrix(parse_matrix(text));
          },
          py::arg("text"), "Parse '+'/'-' rows.");
    m.def("serialize_matrix",
          [](const std::vector<std::vector<int>>& rows) {
              return serialize_matrix(to_matrix(rows));
          },
          py::arg("rows"));

    m.def("projector_norm",
          [](const std::vector<std::vector<int>>& rows, int workers,
             bool timing) {
              HadamardMatrix h = normalize_last_column(to_matrix(rows));
              const NormReport r =
                  hadamard_projector_norm(h, scan_options(workers));
              return json_to_py(norm_report_json(r, timing));
          },
          py::arg("rows"), py::arg("workers") = 1, py::arg("timing") = false,
          "Exact projector norm over the cube's vertices; dict mirrors the "
          "CLI's JSON report.");
    m.def("absorption",
          [](const std::vector<std::vector<int>>& rows, int workers) {
              HadamardMatrix h = normalize_last_column(to_matrix(rows));
              const NormReport r =
                  hadamard_projector_norm(h, scan_options(workers));
              const Rational xi =
                  xi_from_min_lambda(r.dimension, r.min_lambda);
              return json_to_py(
                  absorption_report_json(check_xi_inequalities(r, xi)));
          },
          py::arg("rows"), py::arg("workers") = 1,
          "Absorption index and its verified two-sided bounds.");

    m.def("ball_norm",
          [](int n) { return json_to_py(ball_norm_json(ball_projector_norm(n))); },
          py::arg("n"));
    m.def("ball_sweep",
          [](int max_n) { return json_to_py(ball_sweep_json(ball_norm_sweep(max_n))); },
          py::arg("max_n"));
    m.def("split_point", &split_point, py::arg("n"));

    m.def("maxdet_bruteforce",
          [](int n, int workers) {
              return big_to_py(maxdet01_bruteforce(n, workers).str());
          },
          py::arg("n"), py::arg("workers") = 1,
          "Exhaustive maximal 0/1 determinant, n <= 6.");
    m.def("bounds_row",
          [](int n, int workers) {
              return json_to_py(bounds_row_json(make_bounds_row(n, workers)));
          },
          py::arg("n"), py::arg("workers") = 1,
          "Determinant values/bounds and norm bounds for one dimension.");
}
