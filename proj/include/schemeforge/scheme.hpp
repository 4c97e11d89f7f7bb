#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemeforge/digraph.hpp"
#include "schemeforge/matrix.hpp"
#include "schemeforge/polynomial.hpp"

namespace schemeforge {

enum class RejectionCode {
  kNotNonnegative,
  kNotIrreducible,
  kNotDoublyStochastic,
  kNotNormal,
  kLambdaZero,
  kEigencountNeDiameter,
  kAdNotPolynomial,
  kAxiomFailure,
};

const char* to_string(RejectionCode code);
/// Inverse of to_string; throws PreconditionError on an unknown name.
RejectionCode rejection_code_from_string(const std::string& name);

struct RejectionReason {
  RejectionCode code = RejectionCode::kAxiomFailure;
  /// Set for kEigencountNeDiameter.
  std::size_t d = 0;
  std::size_t diameter = 0;
  /// Set for kAxiomFailure: "AS1".."AS5", or "CLASS_POLYNOMIAL" when some
  /// A_i != p_i(B).
  std::string axiom;
  std::vector<std::size_t> witness;

  std::string describe() const;
  friend bool operator==(const RejectionReason&, const RejectionReason&) = default;
};

/// p^h_{ij}, stored as values[h][i][j].
using IntersectionTensor = std::vector<std::vector<std::vector<Rational>>>;

struct SchemeCertificate {
  bool accepted = false;
  std::optional<RejectionReason> reason;
  std::optional<Rational> lambda;
  /// Number of distinct eigenvalues minus one; set once the minimal polynomial is known.
  std::optional<std::size_t> d;
  /// Diameter of the underlying digraph; set once it is known.
  std::optional<std::size_t> diameter;
  std::optional<Polynomial> hoffman;
  std::vector<Polynomial> predistance;
  /// A_0..A_D; populated only when accepted.
  std::vector<Matrix> class_matrices;
  IntersectionTensor intersection_numbers;
  std::vector<std::size_t> transpose_map;

  friend bool operator==(const SchemeCertificate&, const SchemeCertificate&) = default;
};

/// Decides whether the polynomials in B form the Bose-Mesner algebra of a
/// commutative D-class association scheme. Never throws on a square matrix:
/// every failure is a rejection with a reason.
SchemeCertificate detect_scheme(const Matrix& b);

/// Checks that the class matrices are 0/1, A_0 == I and sum == J, then reads
/// p^h_{ij} from the support of A_h, checks it is constant there, and checks
/// A_i A_j == sum_h p^h_{ij} A_h. Throws SchemeAxiomError on any failure.
IntersectionTensor intersection_numbers(const std::vector<Matrix>& class_matrices);

/// i -> i' with A_i^T == A_{i'}. Throws SchemeAxiomError("AS3", {i}) when no
/// class matches.
std::vector<std::size_t> transpose_map(const std::vector<Matrix>& class_matrices);

/// (A_{D-j} B^T)(x, y) == 0 whenever dist(x, y) < D - j - 1, for every j with
/// D - j - 1 >= 2. Vacuously true when D <= 2.
bool vanishing_product_check(const Matrix& b, const DistanceStructure& ds);

/// Within the support of each class matrix every pair has the same distance.
bool class_distance_constancy(const SchemeCertificate& certificate, const DistanceStructure& ds);

}  // namespace schemeforge
