#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eigenstrata/arrangement.hpp"
#include "eigenstrata/distance.hpp"
#include "eigenstrata/interpolator.hpp"
#include "eigenstrata/invariants.hpp"
#include "eigenstrata/suite.hpp"
#include "eigenstrata/univariate.hpp"

namespace py = pybind11;
using namespace eigenstrata;

namespace {

// Results cross the boundary as plain dicts; exact numbers stay strings and
// the Python side turns them into Fractions.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Partition part(const std::string& s) { return Partition::parse(s); }

InterpolationOptions interp_options(const std::string& mode, unsigned threads) {
  InterpolationOptions o;
  o.mode = parse_mode(mode);
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_eigenstrata, m) {
  m.doc() = "Exact computations on strata of symmetric matrices by eigenvalue multiplicity";
  py::register_exception<Error>(m, "EigenstrataError");

  m.def("dimension", [](const std::string& p) { return dimension(part(p)); });
  m.def("codimension", [](const std::string& p) { return codimension(part(p)); });
  m.def("multinomial", [](const std::string& p) { return multinomial(part(p)); });
  m.def("parametrization_rank", [](const std::string& p, std::uint64_t seed) { return parametrization_rank(part(p), seed); },
        py::arg("partition"), py::arg("seed") = 1);

  m.def(
      "sample",
      [](const std::string& p, std::size_t count, std::uint64_t seed) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& s : random_samples(part(p), count, seed)) out.push_back(to_json(s));
        return to_py(out);
      },
      py::arg("partition"), py::arg("count") = 1, py::arg("seed") = 1);

  m.def(
      "vanishing_forms",
      [](const std::string& p, unsigned d, std::uint64_t seed, const std::string& mode, unsigned threads) {
        InterpolationReport r;
        {
          py::gil_scoped_release nogil;
          r = vanishing_forms(part(p), d, seed, interp_options(mode, threads));
        }
        return to_py(to_json(r));
      },
      py::arg("partition"), py::arg("degree"), py::arg("seed") = 1, py::arg("mode") = "auto", py::arg("threads") = 1);

  m.def("discriminant", [](std::size_t n) {
    return to_text(matrix_discriminant_symbolic(n), VariableIndexing(n));
  });

  m.def("hilbert_polynomial", [](const std::string& p) { return to_py(to_json(paper_hilbert(part(p)))); });
  m.def(
      "hilbert_function",
      [](const std::string& p, unsigned t, std::uint64_t seed) { return hilbert_function_oracle(part(p), t, seed); },
      py::arg("partition"), py::arg("t"), py::arg("seed") = 1);
  m.def(
      "arrangement_degree",
      [](const std::string& p, std::uint64_t seed) { return to_py(to_json(arrangement_degree(part(p), seed))); },
      py::arg("partition"), py::arg("seed") = 1);

  m.def(
      "edd", [](const std::string& p, std::uint64_t seed) { return to_py(to_json(edd_report(part(p), seed))); },
      py::arg("partition"), py::arg("seed") = 1);
  m.def(
      "nearest",
      [](const std::vector<std::vector<double>>& rows, const std::string& p) {
        Matrix<double> a(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != rows.size()) throw DimensionError("matrix must be square");
          for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
        }
        return to_py(to_json(nearest_symmetric(FloatSymmetric::from_dense(a), part(p))));
      },
      py::arg("matrix"), py::arg("partition"));

  m.def(
      "chevalley",
      [](const std::string& p, unsigned dmax, std::uint64_t seed) {
        return to_py(to_json(chevalley_check(part(p), dmax, seed)));
      },
      py::arg("partition"), py::arg("dmax"), py::arg("seed") = 1);

  m.def(
      "run_suite",
      [](std::vector<int> criteria, std::uint64_t seed, unsigned threads, const std::string& data_dir) {
        SuiteOptions o;
        o.criteria = std::move(criteria);
        o.seed = seed;
        o.threads = threads;
        o.data_dir = data_dir;
        SuiteReport r;
        {
          py::gil_scoped_release nogil;
          r = run_suite(o);
        }
        return to_py(r.json());
      },
      py::arg("criteria") = std::vector<int>{}, py::arg("seed") = 1, py::arg("threads") = 1,
      py::arg("data_dir") = "");
}
