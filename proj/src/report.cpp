#include "schemeforge/report.hpp"

#include "schemeforge/errors.hpp"

namespace schemeforge {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw PreconditionError("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json polynomial_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Polynomial(std::move(c));
}

namespace {

Json optional_rational(const std::optional<Rational>& r) { return r ? rational_to_json(*r) : Json(nullptr); }

std::optional<Rational> optional_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j);
}

Json grid_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < m.order(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < m.order(); ++y) {
      if (is_integer(m(x, y)) && m(x, y).get_num().fits_slong_p()) {
        row.push_back(m(x, y).get_num().get_si());
      } else {
        row.push_back(rational_to_json(m(x, y)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix grid_from_json(const Json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(e.is_string() ? rational_from_json(e) : Rational(e.get<long>()));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> optional_size_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

Json reason_to_json(const RejectionReason& r) {
  Json j;
  j["code"] = to_string(r.code);
  if (r.code == RejectionCode::kEigencountNeDiameter) {
    j["d"] = r.d;
    j["D"] = r.diameter;
  }
  if (r.code == RejectionCode::kAxiomFailure) {
    j["axiom"] = r.axiom;
    j["witness"] = r.witness;
  }
  j["text"] = r.describe();
  return j;
}

RejectionReason reason_from_json(const Json& j) {
  RejectionReason r;
  r.code = rejection_code_from_string(j.at("code").get<std::string>());
  if (j.contains("d")) r.d = j["d"].get<std::size_t>();
  if (j.contains("D")) r.diameter = j["D"].get<std::size_t>();
  if (j.contains("axiom")) r.axiom = j["axiom"].get<std::string>();
  if (j.contains("witness")) r.witness = j["witness"].get<std::vector<std::size_t>>();
  return r;
}

Json complex_to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const MatrixClassification& c) {
  Json j;
  j["order"] = c.order;
  j["nonnegative"] = c.nonnegative;
  j["lambda"] = optional_rational(c.lambda);
  j["doubly_stochastic"] = c.doubly_stochastic();
  j["irreducible"] = c.irreducible;
  j["normal"] = c.normal;
  return j;
}

MatrixClassification classification_from_json(const Json& j) {
  MatrixClassification c;
  c.order = j.at("order").get<std::size_t>();
  c.nonnegative = j.at("nonnegative").get<bool>();
  c.lambda = optional_rational_from(j.at("lambda"));
  c.irreducible = j.at("irreducible").get<bool>();
  c.normal = j.at("normal").get<bool>();
  return c;
}

Json to_json(const HoffmanPolynomial& h) {
  Json j;
  j["lambda"] = rational_to_json(h.lambda);
  j["q"] = polynomial_to_json(h.q);
  j["h"] = polynomial_to_json(h.h);
  j["h_human"] = to_human_string(h.h);
  j["verified"] = true;
  return j;
}

HoffmanPolynomial hoffman_from_json(const Json& j) {
  HoffmanPolynomial h;
  h.lambda = rational_from_json(j.at("lambda"));
  h.q = polynomial_from_json(j.at("q"));
  h.h = polynomial_from_json(j.at("h"));
  return h;
}

Json to_json(const PredistanceBasis& basis) {
  Json j;
  j["lambda"] = rational_to_json(basis.lambda);
  j["d"] = basis.d();
  Json polys = Json::array();
  Json values = Json::array();
  for (std::size_t i = 0; i < basis.polys.size(); ++i) {
    polys.push_back(polynomial_to_json(basis.polys[i]));
    values.push_back(rational_to_json(basis.norms_sq[i]));
  }
  j["polynomials"] = std::move(polys);
  j["values_at_lambda"] = std::move(values);
  return j;
}

Json to_json(const EntryDecomposition& d) {
  Json j;
  Json coeffs = Json::array();
  Json ind = Json::array();
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    coeffs.push_back(rational_to_json(d.coefficients[i]));
    ind.push_back(grid_to_json(d.indicators[i]));
  }
  j["coefficients"] = std::move(coeffs);
  j["indicators"] = std::move(ind);
  return j;
}

Json to_json(const SchemeCertificate& cert) {
  Json j;
  j["verdict"] = cert.accepted ? "accepted" : "rejected";
  j["reason"] = cert.reason ? reason_to_json(*cert.reason) : Json(nullptr);
  j["lambda"] = optional_rational(cert.lambda);
  j["d"] = optional_size(cert.d);
  j["D"] = optional_size(cert.diameter);
  j["hoffman"] = cert.hoffman ? polynomial_to_json(*cert.hoffman) : Json(nullptr);
  Json pre = Json::array();
  for (const auto& p : cert.predistance) pre.push_back(polynomial_to_json(p));
  j["predistance"] = std::move(pre);
  Json classes = Json::array();
  for (const auto& a : cert.class_matrices) classes.push_back(grid_to_json(a));
  j["classes"] = std::move(classes);
  Json tensor = Json::array();
  for (const auto& plane : cert.intersection_numbers) {
    Json jp = Json::array();
    for (const auto& row : plane) {
      Json jr = Json::array();
      for (const auto& v : row) jr.push_back(rational_to_json(v));
      jp.push_back(std::move(jr));
    }
    tensor.push_back(std::move(jp));
  }
  j["intersection_numbers"] = std::move(tensor);
  j["transpose_map"] = cert.transpose_map;
  return j;
}

SchemeCertificate certificate_from_json(const Json& j) {
  SchemeCertificate cert;
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "accepted" && verdict != "rejected") throw PreconditionError("unknown verdict '" + verdict + "'");
  cert.accepted = verdict == "accepted";
  if (!j.at("reason").is_null()) cert.reason = reason_from_json(j["reason"]);
  cert.lambda = optional_rational_from(j.at("lambda"));
  cert.d = optional_size_from(j.at("d"));
  cert.diameter = optional_size_from(j.at("D"));
  if (!j.at("hoffman").is_null()) cert.hoffman = polynomial_from_json(j["hoffman"]);
  for (const auto& p : j.at("predistance")) cert.predistance.push_back(polynomial_from_json(p));
  for (const auto& g : j.at("classes")) cert.class_matrices.push_back(grid_from_json(g));
  for (const auto& plane : j.at("intersection_numbers")) {
    std::vector<std::vector<Rational>> p;
    for (const auto& row : plane) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      p.push_back(std::move(r));
    }
    cert.intersection_numbers.push_back(std::move(p));
  }
  cert.transpose_map = j.at("transpose_map").get<std::vector<std::size_t>>();
  return cert;
}

Json to_json(const SpectrumReport& s) {
  Json j;
  Json eig = Json::array();
  for (const auto& z : s.spectrum.eigenvalues) eig.push_back(complex_to_json(z));
  j["eigenvalues"] = std::move(eig);
  j["residuals"] = s.spectrum.residuals;
  j["iterations"] = s.spectrum.iterations;
  if (s.perron) {
    const auto& p = *s.perron;
    j["perron"] = {{"lambda", p.lambda},
                   {"max_modulus", p.max_modulus},
                   {"lambda_error", p.lambda_error},
                   {"min_gap", p.min_gap},
                   {"lambda_is_eigenvalue", p.lambda_is_eigenvalue},
                   {"lambda_dominates", p.lambda_dominates},
                   {"lambda_simple", p.lambda_simple},
                   {"row_sums_exact", p.row_sums_exact}};
  } else {
    j["perron"] = nullptr;
  }
  if (s.idempotents) {
    const auto& f = *s.idempotents;
    j["idempotents"] = {{"count", f.idempotents.size()},
                        {"orthogonality_residual", f.orthogonality_residual},
                        {"sum_residual", f.sum_residual},
                        {"decomposition_residual", f.decomposition_residual},
                        {"hermitian_residual", f.hermitian_residual}};
  } else {
    j["idempotents"] = nullptr;
  }
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j = Json::object();
  if (r.classification) j["classification"] = to_json(*r.classification);
  if (r.hoffman) j["hoffman"] = to_json(*r.hoffman);
  if (r.predistance) j["predistance"] = *r.predistance;
  if (r.scheme) j["scheme"] = to_json(*r.scheme);
  if (r.spectrum) j["spectrum"] = *r.spectrum;
  if (r.decomposition) j["decomposition"] = *r.decomposition;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  if (j.contains("classification")) r.classification = classification_from_json(j["classification"]);
  if (j.contains("hoffman")) r.hoffman = hoffman_from_json(j["hoffman"]);
  if (j.contains("predistance")) r.predistance = j["predistance"];
  if (j.contains("scheme")) r.scheme = certificate_from_json(j["scheme"]);
  if (j.contains("spectrum")) r.spectrum = j["spectrum"];
  if (j.contains("decomposition")) r.decomposition = j["decomposition"];
  return r;
}

}  // namespace schemeforge
