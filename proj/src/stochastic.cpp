#include "schemeforge/stochastic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "schemeforge/digraph.hpp"
#include "schemeforge/errors.hpp"

namespace schemeforge {

MatrixClassification classify(const Matrix& b) {
  const std::size_t n = b.order();
  MatrixClassification c;
  c.order = n;
  c.nonnegative = std::all_of(b.entries().begin(), b.entries().end(), [](const Rational& e) { return e >= 0; });

  std::vector<Rational> rows(n), cols(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows[x] += b(x, y);
      cols[y] += b(x, y);
    }
  }
  if (n > 0) {
    const Rational& first = rows.front();
    bool agree = std::all_of(rows.begin(), rows.end(), [&](const Rational& s) { return s == first; }) &&
                 std::all_of(cols.begin(), cols.end(), [&](const Rational& s) { return s == first; });
    if (agree) c.lambda = first;
  }

  const Matrix bt = b.transpose();
  c.normal = b * bt == bt * b;
  c.irreducible = is_strongly_connected(support_digraph(b));
  return c;
}

void require_hypotheses(const MatrixClassification& c, bool need_normal) {
  if (!c.nonnegative) throw HypothesisError(Hypothesis::kNonnegative);
  if (!c.lambda) throw HypothesisError(Hypothesis::kDoublyStochastic);
  if (!c.irreducible) throw HypothesisError(Hypothesis::kIrreducible);
  if (*c.lambda == 0) throw HypothesisError(Hypothesis::kNonzeroLambda);
  if (need_normal && !c.normal) throw HypothesisError(Hypothesis::kNormal);
}

Matrix EntryDecomposition::reconstruct(std::size_t order) const {
  Matrix b(order);
  for (std::size_t i = 0; i < coefficients.size(); ++i) b += indicators[i] * coefficients[i];
  return b;
}

EntryDecomposition entry_decomposition(const Matrix& b) {
  const std::size_t n = b.order();
  std::map<Rational, Matrix> groups;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational& e = b(x, y);
      if (e < 0) throw PreconditionError("entry_decomposition needs a nonnegative matrix");
      if (e == 0) continue;
      auto it = groups.try_emplace(e, n).first;
      it->second(x, y) = 1;
    }
  }
  EntryDecomposition d;
  for (auto& [value, indicator] : groups) {
    d.coefficients.push_back(value);
    d.indicators.push_back(std::move(indicator));
  }
  return d;
}

namespace {

// Positive weights summing to lambda.
std::vector<Rational> random_weights(std::size_t k, std::mt19937_64& rng, const Rational& lambda) {
  std::uniform_int_distribution<long> pick(1, 12);
  std::vector<long> w(k);
  for (auto& v : w) v = pick(rng);
  const long total = std::accumulate(w.begin(), w.end(), 0L);
  std::vector<Rational> c;
  c.reserve(k);
  for (long v : w) c.push_back(lambda * make_rational(v, total));
  return c;
}

void add_permutation(Matrix& b, const std::vector<std::size_t>& perm, const Rational& weight) {
  for (std::size_t x = 0; x < perm.size(); ++x) b(x, perm[x]) += weight;
}

void require_shape(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw PreconditionError("random generator needs n >= 1 and k >= 1");
}

}  // namespace

Matrix random_lambda_ds(std::size_t n, std::size_t k, std::uint64_t seed, const Rational& lambda) {
  require_shape(n, k);
  std::mt19937_64 rng(seed);
  const auto weights = random_weights(k, rng, lambda);
  Matrix b(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    add_permutation(b, perm, weights[i]);
  }
  return b;
}

Matrix random_normal_lambda_ds(std::size_t n, std::size_t k, std::uint64_t seed, const Rational& lambda) {
  require_shape(n, k);
  std::mt19937_64 rng(seed);
  const auto weights = random_weights(k, rng, lambda);

  std::vector<std::size_t> divisors;
  for (std::size_t a = 1; a <= n; ++a) {
    if (n % a == 0) divisors.push_back(a);
  }
  const std::size_t a = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
  const std::size_t bsize = n / a;

  // Vertex v <-> group element (v / bsize, v % bsize), then relabelled.
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);

  Matrix b(n);
  std::vector<std::size_t> perm(n);
  std::uniform_int_distribution<std::size_t> pick_a(0, a - 1), pick_b(0, bsize - 1);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ga = pick_a(rng);
    const std::size_t gb = pick_b(rng);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t w = ((v / bsize + ga) % a) * bsize + (v % bsize + gb) % bsize;
      perm[label[v]] = label[w];
    }
    add_permutation(b, perm, weights[i]);
  }
  return b;
}

}  // namespace schemeforge
