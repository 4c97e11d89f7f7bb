#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "schemeforge/matrix.hpp"

namespace schemeforge {

/// Directed graph on vertices 0..n-1 with loops and, for walk counting,
/// repeated arcs. Arc (x, y) is stored with its multiplicity.
class Digraph {
 public:
  explicit Digraph(std::size_t order = 0);

  /// Arc multiplicities taken from a matrix of nonnegative integers.
  static Digraph from_arc_counts(const std::vector<std::vector<unsigned>>& counts);

  std::size_t order() const { return order_; }
  unsigned arcs(std::size_t x, std::size_t y) const { return counts_[x * order_ + y]; }
  bool has_arc(std::size_t x, std::size_t y) const { return arcs(x, y) != 0; }
  void add_arc(std::size_t x, std::size_t y, unsigned multiplicity = 1);

  /// Out-neighbours of x in increasing order, each listed once.
  const std::vector<std::size_t>& successors(std::size_t x) const { return out_[x]; }

  /// Total number of arcs counted with multiplicity, loops included.
  std::size_t arc_count() const;
  std::size_t loop_count() const;

  /// The adjacency matrix with multiplicities as entries.
  Matrix adjacency() const;

 private:
  std::size_t order_;
  std::vector<unsigned> counts_;
  std::vector<std::vector<std::size_t>> out_;
};

/// Arc (x, y) exactly where B(x, y) > 0. Throws PreconditionError naming the
/// first negative entry.
Digraph underlying_digraph(const Matrix& b);

/// Arc (x, y) exactly where B(x, y) != 0, whatever the sign.
Digraph support_digraph(const Matrix& b);

/// Strongly connected components (Tarjan), each sorted, listed in reverse
/// topological order of the condensation.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// All-pairs directed distances of a strongly connected digraph and its
/// distance-i matrices A_0..A_D.
struct DistanceStructure {
  std::size_t order = 0;
  std::vector<std::size_t> dist;  // row-major, dist[x * order + y]
  std::size_t diameter = 0;
  std::vector<Matrix> classes;  // classes[i](x, y) == 1 iff dist(x, y) == i

  std::size_t distance(std::size_t x, std::size_t y) const { return dist[x * order + y]; }
};

/// One BFS per source. Throws PreconditionError if some pair is unreachable.
DistanceStructure distance_structure(const Digraph& g);

/// BFS distances from a single source; kUnreachable where no path exists.
std::vector<std::size_t> bfs_distances(const Digraph& g, std::size_t source);

/// A^l, whose (x, y) entry counts the directed walks of length l from x to y.
Matrix walk_count(const Digraph& g, std::size_t length);

}  // namespace schemeforge
