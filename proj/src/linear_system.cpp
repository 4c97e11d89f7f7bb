#include "schemeforge/linear_system.hpp"

#include <utility>

#include "schemeforge/errors.hpp"

namespace schemeforge {
namespace {

using IntegerGrid = std::vector<std::vector<Integer>>;

// One row per equation; each row is multiplied by the lcm of its denominators.
IntegerGrid scale_to_integers(const std::vector<std::span<const Rational>>& columns,
                              std::span<const Rational> target) {
  const std::size_t rows = columns.empty() ? target.size() : columns.front().size();
  for (const auto& col : columns) {
    if (col.size() != rows) throw DimensionError("linear system columns have different lengths");
  }
  if (!target.empty() && target.size() != rows) throw DimensionError("right-hand side length mismatch");

  const std::size_t width = columns.size() + (target.empty() ? 0 : 1);
  IntegerGrid grid(rows, std::vector<Integer>(width));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (const auto& col : columns) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), col[r].get_den_mpz_t());
    if (!target.empty()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), target[r].get_den_mpz_t());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      grid[r][j] = columns[j][r].get_num() * (lcm / columns[j][r].get_den());
    }
    if (!target.empty()) grid[r][width - 1] = target[r].get_num() * (lcm / target[r].get_den());
  }
  return grid;
}

// Fraction-free row echelon form over the first `pivot_width` columns; the
// remaining columns ride along. Returns the pivot column of each pivot row.
std::vector<std::size_t> bareiss_echelon(IntegerGrid& a, std::size_t pivot_width) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  if (rows == 0) return pivots;
  const std::size_t width = a.front().size();

  Integer previous = 1;
  std::size_t row = 0;
  Integer t;
  for (std::size_t c = 0; c < pivot_width && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);

    const Integer& pivot = a[row][c];
    for (std::size_t i = row + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        t = pivot * a[i][j] - factor * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const std::vector<std::span<const Rational>>& columns,
                                                 std::span<const Rational> target) {
  const std::size_t unknowns = columns.size();
  if (!columns.empty() && columns.front().size() != target.size()) {
    throw DimensionError("right-hand side length mismatch");
  }
  if (target.empty()) return std::vector<Rational>(unknowns);
  IntegerGrid a = scale_to_integers(columns, target);

  const auto pivots = bareiss_echelon(a, unknowns);
  for (std::size_t i = pivots.size(); i < a.size(); ++i) {
    if (a[i][unknowns] != 0) return std::nullopt;
  }

  std::vector<Rational> x(unknowns);
  for (std::size_t s = pivots.size(); s-- > 0;) {
    const std::size_t c = pivots[s];
    Rational acc(a[s][unknowns]);
    for (std::size_t j = c + 1; j < unknowns; ++j) {
      if (x[j] != 0) acc -= Rational(a[s][j]) * x[j];
    }
    x[c] = acc / Rational(a[s][c]);
  }
  return x;
}

std::size_t exact_rank(const std::vector<std::span<const Rational>>& columns) {
  IntegerGrid a = scale_to_integers(columns, {});
  return bareiss_echelon(a, columns.size()).size();
}

}  // namespace schemeforge
