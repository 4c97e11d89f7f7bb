#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "schemeforge/rational.hpp"

namespace schemeforge {

/// Univariate polynomial over the rationals, stored dense in ascending degree.
/// The coefficient list never ends in a zero; the zero polynomial is empty and
/// has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial constant(const Rational& c);
  /// c * t^k
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  /// t - root
  static Polynomial linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k; zero past the degree.
  Rational coefficient(std::size_t k) const;
  /// Leading coefficient. Zero for the zero polynomial.
  Rational leading() const;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;

  Polynomial monic() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Synthetic division by (t - root). Throws PreconditionError unless root is a
/// root of m, so that m == (t - root) * result exactly.
Polynomial divide_linear(const Polynomial& m, const Rational& root);

/// Euclidean division: returns (quotient, remainder). Throws DimensionError on a
/// zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), made monic. Has the same roots as p, each simple.
Polynomial squarefree_part(const Polynomial& p);

/// "c0 c1 c2 ..." with exact rationals; "0" for the zero polynomial.
std::string to_ascending_string(const Polynomial& p);

/// Human form, highest degree first: "16t^3 - 16t^2 + 8t - 2". Fractional
/// coefficients of t^k, k >= 1, are parenthesized: "(1/3)t^2".
std::string to_human_string(const Polynomial& p);

}  // namespace schemeforge
