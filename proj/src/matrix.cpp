#include "schemeforge/matrix.hpp"

#include <string>

#include "schemeforge/errors.hpp"
#include "schemeforge/linear_system.hpp"

namespace schemeforge {

Matrix::Matrix(std::size_t order) : order_(order), data_(order * order) {}

Matrix Matrix::identity(std::size_t order) {
  Matrix m(order);
  for (std::size_t x = 0; x < order; ++x) m(x, x) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t order) {
  Matrix m(order);
  for (auto& e : m.data_) e = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw DimensionError("matrix must have at least one row");
  Matrix m(rows.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != rows.size()) {
      throw DimensionError("row " + std::to_string(x) + " has " + std::to_string(rows[x].size()) +
                           " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t y = 0; y < rows.size(); ++y) m(x, y) = rows[x][y];
  }
  return m;
}

void Matrix::require_same_order(const Matrix& other, const char* op) const {
  if (order_ != other.order_) {
    throw DimensionError(std::string(op) + ": order " + std::to_string(order_) + " vs " +
                         std::to_string(other.order_));
  }
}

Matrix Matrix::transpose() const {
  Matrix t(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) t(y, x) = (*this)(x, y);
  }
  return t;
}

Matrix Matrix::hadamard(const Matrix& other) const {
  require_same_order(other, "hadamard");
  Matrix h(order_);
  for (std::size_t k = 0; k < data_.size(); ++k) h.data_[k] = data_[k] * other.data_[k];
  return h;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t x = 0; x < order_; ++x) t += (*this)(x, x);
  return t;
}

Rational Matrix::total() const {
  Rational t = 0;
  for (const auto& e : data_) t += e;
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (e != 0) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_order(other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_order(other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& e : data_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_same_order(b, "multiply");
  const std::size_t n = a.order_;
  Matrix c(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      const Rational& axz = a(x, z);
      if (axz == 0) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (b(z, y) != 0) c(x, y) += axz * b(z, y);
      }
    }
  }
  return c;
}

Matrix evaluate(const Polynomial& p, const Matrix& b) {
  const std::size_t n = b.order();
  Matrix acc(n);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * b;
    for (std::size_t x = 0; x < n; ++x) acc(x, x) += c[k];
  }
  return acc;
}

Rational trace_inner_product(const Matrix& m, const Matrix& n) {
  if (m.order() != n.order()) throw DimensionError("inner product of matrices of different order");
  if (m.order() == 0) throw DimensionError("inner product on empty matrices");
  Rational s = 0;
  auto me = m.entries();
  auto ne = n.entries();
  for (std::size_t k = 0; k < me.size(); ++k) {
    if (me[k] != 0 && ne[k] != 0) s += me[k] * ne[k];
  }
  return s / static_cast<unsigned long>(m.order());
}

PowerBasis::PowerBasis(Matrix b, std::size_t max_degree) : b_(std::move(b)) {
  powers_.push_back(Matrix::identity(b_.order()));
  ensure(max_degree);
}

void PowerBasis::extend() { powers_.push_back(b_ * powers_.back()); }

void PowerBasis::ensure(std::size_t k) {
  while (max_degree() < k) extend();
}

void PowerBasis::truncate(std::size_t k) {
  if (k < max_degree()) powers_.resize(k + 1);
}

std::optional<Polynomial> algebra_membership(const Matrix& m, const PowerBasis& basis) {
  if (m.order() != basis.base().order()) throw DimensionError("membership test across orders");
  std::vector<std::span<const Rational>> columns;
  columns.reserve(basis.powers().size());
  for (const auto& p : basis.powers()) columns.push_back(p.entries());
  auto x = solve_exact(columns, m.entries());
  if (!x) return std::nullopt;
  Polynomial poly(std::move(*x));

  Matrix check(m.order());
  for (std::size_t k = 0; k < basis.powers().size(); ++k) {
    const Rational c = poly.coefficient(k);
    if (c != 0) check += basis.power(k) * c;
  }
  if (!(check == m)) throw InvariantViolation("algebra_membership: solution does not reproduce the target");
  return poly;
}

}  // namespace schemeforge
