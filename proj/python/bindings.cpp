// Thin pybind11 layer. Matrices cross the boundary as rows of "p/q" strings
// and structured results as JSON text; the Python package turns both into
// fractions.Fraction based objects.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schemeforge/cli.hpp"
#include "schemeforge/errors.hpp"
#include "schemeforge/matrix_io.hpp"
#include "schemeforge/minpoly.hpp"
#include "schemeforge/predistance.hpp"
#include "schemeforge/report.hpp"
#include "schemeforge/scheme.hpp"
#include "schemeforge/spectral.hpp"
#include "schemeforge/stochastic.hpp"

namespace py = pybind11;
using namespace schemeforge;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Matrix from_rows(const Rows& rows) {
  std::vector<std::vector<Rational>> values;
  for (const auto& row : rows) {
    auto& out = values.emplace_back();
    for (const auto& s : row) out.push_back(parse_rational(s));
  }
  return Matrix::from_rows(values);
}

Rows to_rows(const Matrix& m) {
  Rows rows(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) {
    for (std::size_t y = 0; y < m.order(); ++y) rows[x].push_back(to_string(m(x, y)));
  }
  return rows;
}

std::vector<std::string> coefficients(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact association-scheme detection for lambda-doubly stochastic matrices";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", error);
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<HypothesisError>(m, "HypothesisError", precondition);
  py::register_exception<SchemeAxiomError>(m, "SchemeAxiomError", error);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error);

  m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix(text)); });
  m.def("load_matrix", [](const std::string& path) { return to_rows(load_matrix(path)); });
  m.def("serialize_matrix", [](const Rows& rows) { return serialize_matrix(from_rows(rows)); });

  m.def("classify", [](const Rows& rows) { return to_json(classify(from_rows(rows))).dump(); });
  m.def("minimal_polynomial", [](const Rows& rows) { return coefficients(minimal_polynomial(from_rows(rows)).m); });
  m.def("hoffman", [](const Rows& rows) { return to_json(hoffman_polynomial(from_rows(rows))).dump(); });
  m.def("predistance", [](const Rows& rows) { return to_json(predistance_basis(from_rows(rows))).dump(); });
  m.def("decompose", [](const Rows& rows) { return to_json(entry_decomposition(from_rows(rows))).dump(); });
  m.def("detect_scheme", [](const Rows& rows) { return to_json(detect_scheme(from_rows(rows))).dump(); });

  m.def(
      "spectrum",
      [](const Rows& rows, double tol) {
        const Spectrum s = spectrum_of(from_rows(rows), tol);
        return py::make_tuple(s.eigenvalues, s.residuals);
      },
      py::arg("rows"), py::arg("tol") = kRootTolerance);

  m.def(
      "random_lambda_ds",
      [](std::size_t n, std::size_t k, std::uint64_t seed, const std::string& lambda, bool normal) {
        const Rational l = parse_rational(lambda);
        return to_rows(normal ? random_normal_lambda_ds(n, k, seed, l) : random_lambda_ds(n, k, seed, l));
      },
      py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("lam") = "1", py::arg("normal") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
