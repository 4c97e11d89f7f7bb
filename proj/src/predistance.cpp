#include "schemeforge/predistance.hpp"

#include "schemeforge/errors.hpp"
#include "schemeforge/minpoly.hpp"
#include "schemeforge/stochastic.hpp"

namespace schemeforge {

Rational poly_inner(const Polynomial& p, const Polynomial& q, const Matrix& b) {
  return trace_inner_product(evaluate(p, b), evaluate(q, b));
}

namespace {

// Orthogonal system plus the matrices q_i(B), which the caller reuses.
struct OrthogonalSystem {
  std::vector<Polynomial> polys;
  std::vector<Matrix> evaluations;
  std::vector<Rational> norms_sq;
};

OrthogonalSystem gram_schmidt(const PowerBasis& powers, const Rational& lambda, std::size_t d) {
  if (lambda == 0) throw PreconditionError("lambda-avoiding Gram-Schmidt needs lambda != 0");
  const std::size_t n = powers.base().order();
  OrthogonalSystem sys;
  for (std::size_t j = 0; j <= d; ++j) {
    const Matrix& sj = powers.power(j);
    Polynomial projection;
    Matrix projection_at_b(n);
    for (std::size_t l = 0; l < j; ++l) {
      const Rational coeff = trace_inner_product(sys.evaluations[l], sj) / sys.norms_sq[l];
      if (coeff == 0) continue;
      projection += sys.polys[l] * coeff;
      projection_at_b += sys.evaluations[l] * coeff;
    }

    Polynomial qj = Polynomial::monomial(j) - projection;
    Matrix qj_at_b = sj - projection_at_b;
    if (qj(lambda) == 0) {
      qj = Polynomial::monomial(j, 2) - projection;
      qj_at_b = sj * Rational(2) - projection_at_b;
    }
    if (qj(lambda) == 0) throw InvariantViolation("doubled residual still vanishes at lambda");

    Rational norm = trace_inner_product(qj_at_b, qj_at_b);
    if (norm == 0) throw PreconditionError("powers of B up to degree d are linearly dependent");
    sys.polys.push_back(std::move(qj));
    sys.evaluations.push_back(std::move(qj_at_b));
    sys.norms_sq.push_back(std::move(norm));
  }
  return sys;
}

}  // namespace

std::vector<Polynomial> lambda_avoiding_gram_schmidt(const Matrix& b, const Rational& lambda, std::size_t d) {
  return gram_schmidt(PowerBasis(b, d), lambda, d).polys;
}

Polynomial PredistanceBasis::sum() const {
  Polynomial s;
  for (const auto& p : polys) s += p;
  return s;
}

PredistanceBasis predistance_basis(const Matrix& b) {
  const auto cls = classify(b);
  require_hypotheses(cls, true);
  const Rational lambda = *cls.lambda;

  auto krylov = minimal_polynomial_with_powers(b);
  const std::size_t d = krylov.minimal.degree() - 1;
  auto sys = gram_schmidt(krylov.powers, lambda, d);

  PredistanceBasis basis;
  basis.lambda = lambda;
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational scale = sys.polys[i](lambda) / sys.norms_sq[i];
    basis.polys.push_back(sys.polys[i] * scale);
    basis.evaluations.push_back(sys.evaluations[i] * scale);
    basis.norms_sq.push_back(basis.polys[i](lambda));
  }

  for (std::size_t i = 0; i <= d; ++i) {
    const auto& p = basis.polys[i];
    if (p.degree() != static_cast<int>(i)) throw InvariantViolation("predistance polynomial has the wrong degree");
    if (basis.norms_sq[i] <= 0) throw InvariantViolation("p_i(lambda) is not positive");
    if (trace_inner_product(basis.evaluations[i], basis.evaluations[i]) != basis.norms_sq[i]) {
      throw InvariantViolation("||p_i||^2 != p_i(lambda)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (trace_inner_product(basis.evaluations[i], basis.evaluations[j]) != 0) {
        throw InvariantViolation("predistance polynomials are not orthogonal");
      }
    }
  }
  if (basis.polys.front() != Polynomial::constant(1)) throw InvariantViolation("p_0 != 1");
  return basis;
}

bool verify_hoffman_sum(const PredistanceBasis& basis, const Matrix& b) {
  Matrix total(b.order());
  for (const auto& p : basis.polys) total += evaluate(p, b);
  if (!(total == Matrix::ones(b.order()))) return false;
  return basis.sum() == hoffman_polynomial(b).h;
}

}  // namespace schemeforge
