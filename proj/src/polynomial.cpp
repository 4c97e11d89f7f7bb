#include "schemeforge/polynomial.hpp"

#include <algorithm>

#include "schemeforge/errors.hpp"

namespace schemeforge {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial{-root, Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  out *= 1 / leading();
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial divide_linear(const Polynomial& m, const Rational& root) {
  if (m.is_zero()) return {};
  const auto& c = m.coefficients();
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    carry = carry * root + c[k];
    if (k > 0) q[k - 1] = carry;
  }
  if (carry != 0) {
    throw PreconditionError("t - (" + to_string(root) + ") does not divide " + to_human_string(m) +
                            " (remainder " + to_string(carry) + ")");
  }
  return Polynomial(std::move(q));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DimensionError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& div = b.coefficients();
  const std::size_t db = div.size() - 1;
  if (rem.size() < div.size()) return {Polynomial{}, a};

  std::vector<Rational> quot(rem.size() - db);
  const Rational lead_inv = 1 / div.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational f = rem[k] * lead_inv;
    quot[k - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * div[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::string to_ascending_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& c : p.coefficients()) {
    if (!s.empty()) s += ' ';
    s += to_string(c);
  }
  return s;
}

std::string to_human_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    if (s.empty()) {
      if (c[k] < 0) s += "-";
    } else {
      s += c[k] < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) s += k > 0 && !is_integer(mag) ? "(" + to_string(mag) + ")" : to_string(mag);
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace schemeforge
