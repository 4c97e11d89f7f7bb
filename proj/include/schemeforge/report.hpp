#pragma once

#include <json.hpp>

#include <optional>

#include "schemeforge/minpoly.hpp"
#include "schemeforge/predistance.hpp"
#include "schemeforge/scheme.hpp"
#include "schemeforge/spectral.hpp"
#include "schemeforge/stochastic.hpp"

namespace schemeforge {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings and polynomials as ascending lists
// of such strings. Floating-point values appear only in the spectrum section.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const MatrixClassification& c);
MatrixClassification classification_from_json(const Json& j);

Json to_json(const HoffmanPolynomial& h);
HoffmanPolynomial hoffman_from_json(const Json& j);

/// Polynomials and their values at lambda; the cached p_i(B) are not written.
Json to_json(const PredistanceBasis& basis);

Json to_json(const EntryDecomposition& d);

Json to_json(const SchemeCertificate& cert);
SchemeCertificate certificate_from_json(const Json& j);

struct SpectrumReport {
  Spectrum spectrum;
  std::optional<PerronReport> perron;
  std::optional<IdempotentFamily> idempotents;  // residuals only are written
};
Json to_json(const SpectrumReport& s);

/// Every section is optional; a command fills the ones it computes.
struct AnalysisReport {
  std::optional<MatrixClassification> classification;
  std::optional<HoffmanPolynomial> hoffman;
  std::optional<Json> predistance;
  std::optional<SchemeCertificate> scheme;
  std::optional<Json> spectrum;
  std::optional<Json> decomposition;
};

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

}  // namespace schemeforge
