#include <doctest.h>

#include <random>

#include "schemeforge/digraph.hpp"
#include "schemeforge/errors.hpp"
#include "schemeforge/linear_system.hpp"
#include "schemeforge/matrix.hpp"
#include "schemeforge/minpoly.hpp"
#include "schemeforge/stochastic.hpp"
#include "test_support.hpp"

using namespace schemeforge;
using testing_support::fixture;
using testing_support::poly;
using testing_support::q;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  Matrix m(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) m(x, y) = make_rational(num(rng), den(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("products") {
  const Matrix b = fixture("fig2.mat");
  CHECK(Matrix::identity(6) * b == b);
  CHECK(b * Matrix::identity(6) == b);
  CHECK(b * b.transpose() == b.transpose() * b);

  const Matrix p = testing_support::cycle(5);
  CHECK(p * p.transpose() == Matrix::identity(5));
  CHECK_THROWS_AS(Matrix::identity(2) * Matrix::identity(3), DimensionError);
  CHECK_THROWS_AS(Matrix::identity(2) + Matrix::identity(3), DimensionError);
}

TEST_CASE("construction") {
  CHECK_THROWS_AS(Matrix::from_rows({}), DimensionError);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DimensionError);
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(m(1, 0) == 3);
  CHECK(m.transpose()(0, 1) == 3);
  CHECK(m.trace() == 5);
  CHECK(m.total() == 10);
  CHECK(m.hadamard(m)(1, 1) == 16);
  CHECK(Matrix(3).is_zero());
  CHECK(Matrix::ones(3).total() == 9);
}

TEST_CASE("matrix polynomial evaluation") {
  const Matrix b = fixture("fig2.mat");
  CHECK(evaluate(poly({"0", "1"}), b) == b);
  CHECK(evaluate(poly({"-2", "8", "-16", "16"}), b) == Matrix::ones(6));
  const Matrix u = Matrix::ones(5) * q("1/5");
  CHECK(evaluate(poly({"0", "-1", "1"}), u).is_zero());
  CHECK(evaluate(Polynomial{}, b).is_zero());
  CHECK(evaluate(poly({"3"}), b) == Matrix::identity(6) * 3);
}

TEST_CASE("trace inner product") {
  CHECK(trace_inner_product(Matrix::identity(7), Matrix::identity(7)) == 1);
  CHECK(trace_inner_product(Matrix::ones(7), Matrix::ones(7)) == 7);
  const Matrix b = fixture("fig2.mat");
  const Matrix p1 = evaluate(poly({"-2", "4"}), b);
  CHECK(trace_inner_product(p1, p1) == 2);
  CHECK_THROWS_AS(trace_inner_product(Matrix::identity(2), Matrix::identity(3)), DimensionError);
}

TEST_CASE("algebra membership") {
  const Matrix b = fixture("fig2.mat");
  auto krylov = minimal_polynomial_with_powers(b);
  const PowerBasis& basis = krylov.powers;
  REQUIRE(basis.max_degree() == 3);

  const auto h = algebra_membership(Matrix::ones(6), basis);
  REQUIRE(h);
  CHECK(*h == poly({"-2", "8", "-16", "16"}));

  const auto t = algebra_membership(b, basis);
  REQUIRE(t);
  CHECK(*t == poly({"0", "1"}));

  // A_3 of the fig2.mat digraph, with one entry moved out of the span.
  const auto ds = distance_structure(underlying_digraph(b));
  Matrix a3 = ds.classes.at(3);
  CHECK(algebra_membership(a3, basis));
  a3(0, 0) = 1;
  CHECK_FALSE(algebra_membership(a3, basis));

  CHECK_THROWS_AS(algebra_membership(Matrix::identity(3), basis), DimensionError);
}

TEST_CASE("power basis") {
  const Matrix b = testing_support::cycle(4);
  PowerBasis basis(b, 2);
  CHECK(basis.max_degree() == 2);
  CHECK(basis.power(0) == Matrix::identity(4));
  CHECK(basis.power(2) == b * b);
  basis.ensure(5);
  CHECK(basis.max_degree() == 5);
  CHECK(basis.power(4) == Matrix::identity(4));
  basis.truncate(1);
  CHECK(basis.max_degree() == 1);
  CHECK(basis.base() == b);
  CHECK(PowerBasis(b).base() == b);
}

TEST_CASE("exact linear systems") {
  // x + 2y = 5, 3x + 4y = 6  ->  x = -4, y = 9/2
  const std::vector<Rational> c0{1, 3};
  const std::vector<Rational> c1{2, 4};
  const std::vector<Rational> rhs{5, 6};
  const auto sol = solve_exact({c0, c1}, rhs);
  REQUIRE(sol);
  CHECK((*sol)[0] == -4);
  CHECK((*sol)[1] == q("9/2"));

  // Dependent columns, inconsistent right-hand side.
  const std::vector<Rational> d0{1, 2};
  const std::vector<Rational> d1{q("1/2"), 1};
  const std::vector<Rational> bad{1, 1};
  CHECK_FALSE(solve_exact({d0, d1}, bad));
  CHECK(exact_rank({d0, d1}) == 1);
  CHECK(exact_rank({c0, c1}) == 2);

  const std::vector<Rational> short_rhs{1};
  CHECK_THROWS_AS(solve_exact({c0, c1}, short_rhs), DimensionError);
}

TEST_CASE("membership agrees with the Gauss-Jordan oracle on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix b = random_matrix(rng, 4);
    const auto kd = minimal_polynomial_with_powers(b);
    const std::size_t deg = kd.powers.max_degree();
    // A member: a random polynomial in B.
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    const Matrix target = evaluate(Polynomial(c), b);
    const auto mine = algebra_membership(target, kd.powers);
    const auto theirs = oracle::membership(oracle::to_grid(target), oracle::to_grid(b), deg);
    REQUIRE(mine);
    REQUIRE(theirs);
    CHECK(mine->coefficients() == oracle::trim(*theirs));

    // A random matrix is almost never a member; both must agree either way.
    const Matrix other = random_matrix(rng, 4);
    CHECK(algebra_membership(other, kd.powers).has_value() ==
          oracle::membership(oracle::to_grid(other), oracle::to_grid(b), deg).has_value());
  }
}

TEST_CASE("inner product properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, n);
    const Matrix k = random_matrix(rng, n);
    const Rational mm = trace_inner_product(m, m);
    CHECK(mm >= 0);
    CHECK((mm == 0) == m.is_zero());
    CHECK(trace_inner_product(m, k) == oracle::trace_inner(oracle::to_grid(m), oracle::to_grid(k)));
    CHECK(trace_inner_product(m, k) == (m * k.transpose()).trace() / Rational(static_cast<long>(n)));
  }
  CHECK(trace_inner_product(Matrix(3), Matrix(3)) == 0);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix b = random_matrix(rng, 3);
    const Polynomial p({make_rational(static_cast<long>(rng() % 7) - 3), make_rational(1, 2), 2});
    const Polynomial r({make_rational(static_cast<long>(rng() % 5)), -1, 0, make_rational(1, 3)});
    CHECK(evaluate(p + r, b) == evaluate(p, b) + evaluate(r, b));
    CHECK(evaluate(p * r, b) == evaluate(p, b) * evaluate(r, b));
    CHECK(oracle::to_grid(evaluate(p * r, b)) == oracle::evaluate(oracle::Poly((p * r).coefficients()), oracle::to_grid(b)));
  }
}
