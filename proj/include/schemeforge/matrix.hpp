#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "schemeforge/polynomial.hpp"
#include "schemeforge/rational.hpp"

namespace schemeforge {

/// Dense square matrix over the rationals, row-major. Entry (x, y) is row x,
/// column y.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of the given order.
  explicit Matrix(std::size_t order);

  static Matrix identity(std::size_t order);
  static Matrix ones(std::size_t order);
  /// Throws DimensionError unless `rows` is square and nonempty.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const { return order_; }

  Rational& operator()(std::size_t x, std::size_t y) { return data_[x * order_ + y]; }
  const Rational& operator()(std::size_t x, std::size_t y) const { return data_[x * order_ + y]; }

  /// Row-major view of all n*n entries.
  std::span<const Rational> entries() const { return data_; }

  Matrix transpose() const;
  Matrix hadamard(const Matrix& other) const;
  Rational trace() const;
  /// Sum of all entries.
  Rational total() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void require_same_order(const Matrix& other, const char* op) const;

  std::size_t order_ = 0;
  std::vector<Rational> data_;
};

/// p(B) by Horner's rule. The zero polynomial maps to the zero matrix.
Matrix evaluate(const Polynomial& p, const Matrix& b);

/// (1/n) * sum_{u,v} M_uv * N_uv, i.e. (1/n) trace(M N^T) for real data.
Rational trace_inner_product(const Matrix& m, const Matrix& n);

/// The powers I, B, ..., B^k of one matrix, built incrementally.
class PowerBasis {
 public:
  explicit PowerBasis(Matrix b, std::size_t max_degree = 0);

  const Matrix& base() const { return b_; }
  std::size_t max_degree() const { return powers_.size() - 1; }
  const Matrix& power(std::size_t k) const { return powers_.at(k); }
  const std::vector<Matrix>& powers() const { return powers_; }

  /// Appends B^(max_degree+1).
  void extend();
  /// Extends until B^k is present.
  void ensure(std::size_t k);
  /// Drops every power above B^k.
  void truncate(std::size_t k);

 private:
  Matrix b_;
  std::vector<Matrix> powers_;
};

/// Coefficients c_0..c_k with M = sum c_j B^j over the powers held by `basis`,
/// or nothing when M is outside their span. The powers are expected to be
/// linearly independent; with dependent powers some valid combination is returned.
std::optional<Polynomial> algebra_membership(const Matrix& m, const PowerBasis& basis);

}  // namespace schemeforge
