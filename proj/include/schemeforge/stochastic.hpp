#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schemeforge/matrix.hpp"

namespace schemeforge {

struct MatrixClassification {
  std::size_t order = 0;
  bool nonnegative = false;
  /// Common value of all row and column sums, when they agree.
  std::optional<Rational> lambda;
  bool normal = false;
  /// Strong connectivity of the nonzero pattern.
  bool irreducible = false;

  bool doubly_stochastic() const { return nonnegative && lambda.has_value(); }
  /// The hypotheses of the Hoffman polynomial theorem, plus lambda != 0.
  bool hoffman_ready() const { return doubly_stochastic() && irreducible && *lambda != 0; }
};

/// Never throws on a square matrix: every property is reported.
MatrixClassification classify(const Matrix& b);

/// Throws HypothesisError for the first failed hypothesis among nonnegative,
/// doubly stochastic, irreducible, nonzero lambda, and (when asked) normal.
void require_hypotheses(const MatrixClassification& c, bool need_normal);

/// B == c_1 F_1 + ... + c_m F_m with distinct positive c_i in ascending order and
/// 0/1 matrices F_i of pairwise disjoint support.
struct EntryDecomposition {
  std::vector<Rational> coefficients;
  std::vector<Matrix> indicators;

  Matrix reconstruct(std::size_t order) const;
};

/// Throws PreconditionError on a negative entry.
EntryDecomposition entry_decomposition(const Matrix& b);

/// sum_i c_i P_i over k uniformly random permutation matrices of order n, with
/// random positive rational weights summing to lambda. Deterministic in seed.
Matrix random_lambda_ds(std::size_t n, std::size_t k, std::uint64_t seed, const Rational& lambda = 1);

/// Like random_lambda_ds, but the permutations are k random elements of the
/// regular representation of a random abelian group Z_a x Z_b with a*b == n,
/// relabelled by a random bijection. They commute and are closed under
/// transpose, so the result is always normal.
Matrix random_normal_lambda_ds(std::size_t n, std::size_t k, std::uint64_t seed, const Rational& lambda = 1);

}  // namespace schemeforge
