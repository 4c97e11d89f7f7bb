#include "schemeforge/minpoly.hpp"

#include <algorithm>
#include <cmath>

#include "schemeforge/errors.hpp"
#include "schemeforge/stochastic.hpp"

namespace schemeforge {
namespace {

// A reduced row of the echelon basis: integer entries, the index of its first
// nonzero entry, and its expression as a combination of the powers of B.
struct EchelonRow {
  std::vector<Integer> entries;
  std::size_t pivot;
  std::vector<Rational> combination;
};

std::vector<Integer> scaled_vector(const Matrix& power, Integer& scale) {
  scale = 1;
  for (const auto& e : power.entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(power.entries().size());
  for (const auto& e : power.entries()) v.push_back(e.get_num() * (scale / e.get_den()));
  return v;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& e : v) {
    if (e != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace

KrylovData minimal_polynomial_with_powers(const Matrix& b) {
  if (b.order() == 0) throw DimensionError("minimal polynomial of an empty matrix");
  PowerBasis powers(b, 0);
  std::vector<EchelonRow> basis;

  for (std::size_t k = 0;; ++k) {
    powers.ensure(k);
    Integer scale;
    std::vector<Integer> v = scaled_vector(powers.power(k), scale);
    std::vector<Rational> combo(k + 1);
    combo[k] = Rational(scale);

    for (const auto& row : basis) {
      const Integer factor = v[row.pivot];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = row.entries[row.pivot] * v[j] - factor * row.entries[j];
      for (std::size_t j = 0; j < row.combination.size(); ++j) {
        combo[j] = Rational(row.entries[row.pivot]) * combo[j] - Rational(factor) * row.combination[j];
      }
      combo[k] *= Rational(row.entries[row.pivot]);
    }

    auto nz = std::find_if(v.begin(), v.end(), [](const Integer& e) { return e != 0; });
    if (nz == v.end()) {
      MinimalPolynomial mp{Polynomial(std::move(combo)).monic()};
      if (!evaluate(mp.m, b).is_zero()) throw InvariantViolation("minimal polynomial does not annihilate B");
      // Keep exactly I..B^(deg-1) so the powers stay independent.
      powers.truncate(k == 0 ? 0 : k - 1);
      return KrylovData{std::move(mp), std::move(powers)};
    }

    const Integer g = content(v);
    if (g != 1) {
      for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
      for (auto& c : combo) c /= Rational(g);
    }
    const auto pivot = static_cast<std::size_t>(nz - v.begin());
    basis.push_back(EchelonRow{std::move(v), pivot, std::move(combo)});
  }
}

MinimalPolynomial minimal_polynomial(const Matrix& b) { return minimal_polynomial_with_powers(b).minimal; }

HoffmanPolynomial hoffman_polynomial(const Matrix& b) {
  const auto cls = classify(b);
  require_hypotheses(cls, false);
  const Rational lambda = *cls.lambda;

  const auto mp = minimal_polynomial(b);
  HoffmanPolynomial hp;
  hp.lambda = lambda;
  hp.q = divide_linear(mp.m, lambda);
  const Rational q_at_lambda = hp.q(lambda);
  if (q_at_lambda == 0) throw InvariantViolation("q(lambda) vanishes: lambda is a repeated root of the minimal polynomial");
  hp.h = hp.q * (Rational(static_cast<unsigned long>(b.order())) / q_at_lambda);

  if (!(evaluate(hp.h, b) == Matrix::ones(b.order()))) throw InvariantViolation("h(B) != J");
  return hp;
}

double hoffman_product_form_check(const Matrix& b, const std::vector<std::complex<double>>& roots) {
  using cd = std::complex<double>;
  const auto hp = hoffman_polynomial(b);
  const double lambda = to_double(hp.lambda);
  const double n = static_cast<double>(b.order());

  cd pi0 = 1.0;
  for (const auto& mu : roots) pi0 *= lambda - mu;

  std::vector<double> coeffs;
  for (const auto& c : hp.h.coefficients()) coeffs.push_back(to_double(c));
  auto exact_h = [&](cd t) {
    cd acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  auto product_h = [&](cd t) {
    cd acc = n / pi0;
    for (const auto& mu : roots) acc *= t - mu;
    return acc;
  };

  const double scale = std::abs(lambda);
  const cd samples[] = {{0.0, 0.0},  {1.0, 0.0},  {-1.0, 0.0}, {0.5, 0.0},   {-0.5, 0.0},
                        {0.0, 0.5},  {0.3, -0.7}, {-0.6, 0.4}, {0.25, 0.25}, {0.9, 0.1}};
  double worst = 0.0;
  for (const auto& s : samples) worst = std::max(worst, std::abs(exact_h(s * scale) - product_h(s * scale)));
  return worst;
}

}  // namespace schemeforge
