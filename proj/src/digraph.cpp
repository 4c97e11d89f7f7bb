#include "schemeforge/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "schemeforge/errors.hpp"

namespace schemeforge {

Digraph::Digraph(std::size_t order) : order_(order), counts_(order * order, 0), out_(order) {}

Digraph Digraph::from_arc_counts(const std::vector<std::vector<unsigned>>& counts) {
  Digraph g(counts.size());
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x].size() != counts.size()) throw DimensionError("arc count grid is not square");
    for (std::size_t y = 0; y < counts.size(); ++y) {
      if (counts[x][y]) g.add_arc(x, y, counts[x][y]);
    }
  }
  return g;
}

void Digraph::add_arc(std::size_t x, std::size_t y, unsigned multiplicity) {
  if (x >= order_ || y >= order_) throw DimensionError("arc endpoint out of range");
  if (multiplicity == 0) return;
  unsigned& c = counts_[x * order_ + y];
  if (c == 0) {
    auto& succ = out_[x];
    succ.insert(std::lower_bound(succ.begin(), succ.end(), y), y);
  }
  c += multiplicity;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (unsigned c : counts_) total += c;
  return total;
}

std::size_t Digraph::loop_count() const {
  std::size_t total = 0;
  for (std::size_t x = 0; x < order_; ++x) total += arcs(x, x);
  return total;
}

Matrix Digraph::adjacency() const {
  Matrix a(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y : out_[x]) a(x, y) = arcs(x, y);
  }
  return a;
}

Digraph underlying_digraph(const Matrix& b) {
  const std::size_t n = b.order();
  Digraph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int s = sgn(b(x, y));
      if (s < 0) {
        throw PreconditionError("negative entry " + to_string(b(x, y)) + " at (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")");
      }
      if (s > 0) g.add_arc(x, y);
    }
  }
  return g;
}

Digraph support_digraph(const Matrix& b) {
  const std::size_t n = b.order();
  Digraph g(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (b(x, y) != 0) g.add_arc(x, y);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = kUnreachable;
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> sccs;
  std::size_t counter = 0;

  // Explicit call stack of (vertex, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        const std::size_t w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }

      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        sccs.push_back(std::move(component));
      }
    }
  }
  return sccs;
}

bool is_strongly_connected(const Digraph& g) { return strongly_connected_components(g).size() <= 1; }

std::vector<std::size_t> bfs_distances(const Digraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.successors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceStructure distance_structure(const Digraph& g) {
  const std::size_t n = g.order();
  DistanceStructure ds;
  ds.order = n;
  ds.dist.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    auto row = bfs_distances(g, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == kUnreachable) {
        throw PreconditionError("vertex " + std::to_string(y) + " is unreachable from " + std::to_string(x));
      }
      ds.dist[x * n + y] = row[y];
      ds.diameter = std::max(ds.diameter, row[y]);
    }
  }
  ds.classes.assign(ds.diameter + 1, Matrix(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) ds.classes[ds.distance(x, y)](x, y) = 1;
  }
  return ds;
}

Matrix walk_count(const Digraph& g, std::size_t length) {
  const Matrix a = g.adjacency();
  Matrix result = Matrix::identity(g.order());
  for (std::size_t k = 0; k < length; ++k) result = result * a;
  return result;
}

}  // namespace schemeforge
