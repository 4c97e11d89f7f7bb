#pragma once

#include <optional>
#include <span>
#include <vector>

#include "schemeforge/rational.hpp"

namespace schemeforge {

/// Solves sum_j x_j * columns[j] == target exactly.
///
/// Every equation is scaled to integers and the system is reduced with
/// fraction-free (Bareiss) elimination, pivoting on the first nonzero entry of
/// each column in row order. Free variables are set to zero. Returns nothing
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::span<const Rational>>& columns,
                                                 std::span<const Rational> target);

/// Rank of the matrix whose columns are given, by the same elimination.
std::size_t exact_rank(const std::vector<std::span<const Rational>>& columns);

}  // namespace schemeforge
