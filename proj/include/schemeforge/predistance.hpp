#pragma once

#include <vector>

#include "schemeforge/matrix.hpp"
#include "schemeforge/polynomial.hpp"

namespace schemeforge {

/// <p, q> = (1/n) trace(p(B) q(B)^T). Conjugation is the identity on rational data.
Rational poly_inner(const Polynomial& p, const Polynomial& q, const Matrix& b);

/// Gram-Schmidt on 1, t, ..., t^d under poly_inner, keeping lambda off every
/// root: when the plain residual r_j has r_j(lambda) == 0, q_j = 2 t^j - (the
/// same projections) is used instead, and then q_j(lambda) == lambda^j.
/// Throws PreconditionError when lambda == 0.
std::vector<Polynomial> lambda_avoiding_gram_schmidt(const Matrix& b, const Rational& lambda, std::size_t d);

/// Predistance polynomials p_0..p_d of a normal, lambda-doubly stochastic,
/// irreducible matrix: orthogonal, deg p_i == i, ||p_i||^2 == p_i(lambda) > 0.
struct PredistanceBasis {
  std::vector<Polynomial> polys;
  Rational lambda;
  std::vector<Rational> norms_sq;  // norms_sq[i] == p_i(lambda)
  std::vector<Matrix> evaluations;  // p_i(B)

  std::size_t d() const { return polys.size() - 1; }
  /// p_0 + ... + p_d.
  Polynomial sum() const;
};

/// p_i = (q_i(lambda) / ||q_i||^2) q_i over the lambda-avoiding system.
/// Throws HypothesisError on a matrix outside the hypotheses and
/// InvariantViolation if any basis invariant fails.
PredistanceBasis predistance_basis(const Matrix& b);

/// sum_i p_i(B) == J, and sum_i p_i equals the Hoffman polynomial coefficient-wise.
bool verify_hoffman_sum(const PredistanceBasis& basis, const Matrix& b);

}  // namespace schemeforge
