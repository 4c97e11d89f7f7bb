#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "schemeforge/errors.hpp"
#include "schemeforge/matrix.hpp"
#include "schemeforge/polynomial.hpp"

namespace schemeforge {

// Floating-point companion to the exact core. Nothing here feeds back into an
// accept/reject decision.

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kInvariantTolerance = 1e-9;

struct Spectrum {
  /// Distinct roots, sorted by descending real part then descending imaginary
  /// part, so for a lambda-doubly stochastic matrix the Perron value comes first.
  std::vector<std::complex<double>> eigenvalues;
  /// |m(mu)| / ||m||_2 per root.
  std::vector<double> residuals;
  std::size_t iterations = 0;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Spectrum best) : Error(what), best_(std::move(best)) {}
  const Spectrum& best() const { return best_; }

 private:
  Spectrum best_;
};

/// Aberth-Ehrlich simultaneous iteration on a squarefree polynomial, started
/// from a perturbed circle. Converged when every correction is below
/// tol * max(1, |z|). Complex roots are paired with their conjugates
/// afterwards. Throws ConvergenceError after max_iter sweeps.
Spectrum roots(const Polynomial& m, double tol = kRootTolerance, std::size_t max_iter = 500);

/// Roots of the squarefree part of the minimal polynomial of B.
Spectrum spectrum_of(const Matrix& b, double tol = kRootTolerance, std::size_t max_iter = 500);

Eigen::MatrixXcd to_complex(const Matrix& b);

struct IdempotentFamily {
  std::vector<Eigen::MatrixXcd> idempotents;
  double orthogonality_residual = 0;  // max ||E_i E_j - delta_ij E_i||
  double sum_residual = 0;            // ||sum E_i - I||
  double decomposition_residual = 0;  // ||B - sum lambda_i E_i||
  double hermitian_residual = 0;      // max ||E_i^* - E_i||

  double worst() const;
};

/// E_i = prod_{j != i} (B - mu_j I) / (mu_i - mu_j), with every invariant
/// measured in the entrywise max norm. Throws PreconditionError when two
/// eigenvalues are closer than tol.
IdempotentFamily idempotents(const Matrix& b, const Spectrum& spectrum, double tol = kInvariantTolerance);

/// max-norm of B^h - sum_i mu_i^h E_i.
double power_identity_residual(const Matrix& b, const Spectrum& spectrum, const IdempotentFamily& family,
                               std::size_t h);

struct PerronReport {
  double lambda = 0;
  double max_modulus = 0;
  /// Distance from lambda to the nearest computed eigenvalue.
  double lambda_error = 0;
  /// Distance from lambda's eigenvalue to the nearest other eigenvalue.
  double min_gap = 0;
  bool lambda_is_eigenvalue = false;
  bool lambda_dominates = false;
  bool lambda_simple = false;
  /// B 1 == lambda 1, checked exactly.
  bool row_sums_exact = false;

  bool ok() const { return lambda_is_eigenvalue && lambda_dominates && lambda_simple && row_sums_exact; }
};

/// Report only. `lambda` is the exact common line sum of B.
PerronReport perron_check(const Matrix& b, const Rational& lambda, const Spectrum& spectrum,
                          double tol = kInvariantTolerance);

}  // namespace schemeforge
