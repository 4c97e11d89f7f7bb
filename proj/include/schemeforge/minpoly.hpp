#pragma once

#include <complex>
#include <vector>

#include "schemeforge/matrix.hpp"
#include "schemeforge/polynomial.hpp"

namespace schemeforge {

struct MinimalPolynomial {
  Polynomial m;  // monic, m(B) == 0, least degree

  std::size_t degree() const { return static_cast<std::size_t>(m.degree()); }
};

/// Finds the first power B^k lying in the span of I..B^(k-1), adding one
/// vectorised power at a time to an integer-only echelon basis. The
/// dependency found there, made monic, is m. Also checks m(B) == 0.
MinimalPolynomial minimal_polynomial(const Matrix& b);

/// The minimal polynomial plus the powers I..B^(deg m - 1), which are linearly
/// independent.
struct KrylovData {
  MinimalPolynomial minimal;
  PowerBasis powers;
};
KrylovData minimal_polynomial_with_powers(const Matrix& b);

/// h(t) = (n / q(lambda)) q(t), where (t - lambda) q(t) is the minimal polynomial.
struct HoffmanPolynomial {
  Polynomial h;
  Polynomial q;
  Rational lambda;
};

/// Throws HypothesisError unless B is nonnegative, lambda-doubly stochastic and
/// irreducible with lambda != 0. Verifies h(B) == J before returning.
HoffmanPolynomial hoffman_polynomial(const Matrix& b);

/// Evaluates the exact h and the product form (n / pi_0) prod (t - mu) over the
/// given roots mu of q, pi_0 = prod (lambda - mu), at a fixed set of sample
/// points scaled by |lambda|. Returns the largest absolute difference.
double hoffman_product_form_check(const Matrix& b, const std::vector<std::complex<double>>& roots);

}  // namespace schemeforge
