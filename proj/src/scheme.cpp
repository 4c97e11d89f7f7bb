#include "schemeforge/scheme.hpp"

#include <array>
#include <utility>

#include "schemeforge/errors.hpp"
#include "schemeforge/minpoly.hpp"
#include "schemeforge/predistance.hpp"
#include "schemeforge/stochastic.hpp"

namespace schemeforge {

namespace {

constexpr std::array<std::pair<RejectionCode, const char*>, 8> kCodeNames{{
    {RejectionCode::kNotNonnegative, "NOT_NONNEGATIVE"},
    {RejectionCode::kNotIrreducible, "NOT_IRREDUCIBLE"},
    {RejectionCode::kNotDoublyStochastic, "NOT_DOUBLY_STOCHASTIC"},
    {RejectionCode::kNotNormal, "NOT_NORMAL"},
    {RejectionCode::kLambdaZero, "LAMBDA_ZERO"},
    {RejectionCode::kEigencountNeDiameter, "EIGENCOUNT_NE_DIAMETER"},
    {RejectionCode::kAdNotPolynomial, "AD_NOT_POLYNOMIAL"},
    {RejectionCode::kAxiomFailure, "AXIOM_FAILURE"},
}};

bool is_zero_one(const Matrix& m) {
  for (const auto& e : m.entries()) {
    if (e != 0 && e != 1) return false;
  }
  return true;
}

SchemeCertificate reject(SchemeCertificate cert, RejectionReason reason) {
  cert.accepted = false;
  cert.reason = std::move(reason);
  cert.class_matrices.clear();
  cert.intersection_numbers.clear();
  cert.transpose_map.clear();
  return cert;
}

RejectionReason simple(RejectionCode code) {
  RejectionReason r;
  r.code = code;
  return r;
}

RejectionReason axiom_failure(std::string axiom, std::vector<std::size_t> witness) {
  RejectionReason r;
  r.code = RejectionCode::kAxiomFailure;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  return r;
}

}  // namespace

const char* to_string(RejectionCode code) {
  for (const auto& [c, name] : kCodeNames) {
    if (c == code) return name;
  }
  return "?";
}

RejectionCode rejection_code_from_string(const std::string& name) {
  for (const auto& [c, n] : kCodeNames) {
    if (name == n) return c;
  }
  throw PreconditionError("unknown rejection code '" + name + "'");
}

std::string RejectionReason::describe() const {
  std::string s = to_string(code);
  if (code == RejectionCode::kEigencountNeDiameter) {
    s += "(d=" + std::to_string(d) + ", D=" + std::to_string(diameter) + ")";
  } else if (code == RejectionCode::kAxiomFailure) {
    s += "(" + axiom;
    for (auto w : witness) s += ", " + std::to_string(w);
    s += ")";
  }
  return s;
}

IntersectionTensor intersection_numbers(const std::vector<Matrix>& classes) {
  if (classes.empty()) throw SchemeAxiomError("AS1", {0});
  const std::size_t n = classes.front().order();
  const std::size_t r = classes.size();

  for (std::size_t i = 0; i < r; ++i) {
    if (classes[i].order() != n) throw DimensionError("class matrices of different order");
    if (!is_zero_one(classes[i])) throw SchemeAxiomError("AS2", {i});
  }
  if (!(classes.front() == Matrix::identity(n))) throw SchemeAxiomError("AS1", {0});
  // Sum == J with 0/1 summands means the supports partition X x X.
  Matrix total(n);
  for (const auto& a : classes) total += a;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (total(x, y) != 1) throw SchemeAxiomError("AS2", {x, y});
    }
  }

  // A representative pair for each class.
  std::vector<std::pair<std::size_t, std::size_t>> rep(r, {kUnreachable, kUnreachable});
  std::vector<std::size_t> class_of(n * n);
  for (std::size_t h = 0; h < r; ++h) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (classes[h](x, y) == 0) continue;
        class_of[x * n + y] = h;
        if (rep[h].first == kUnreachable) rep[h] = {x, y};
      }
    }
    if (rep[h].first == kUnreachable) throw SchemeAxiomError("AS2", {h});
  }

  IntersectionTensor p(r, std::vector<std::vector<Rational>>(r, std::vector<Rational>(r)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Matrix prod = classes[i] * classes[j];
      for (std::size_t h = 0; h < r; ++h) p[h][i][j] = prod(rep[h].first, rep[h].second);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t h = class_of[x * n + y];
          if (prod(x, y) != p[h][i][j]) throw SchemeAxiomError("AS4", {i, j, h});
        }
      }
      Matrix expansion(n);
      for (std::size_t h = 0; h < r; ++h) {
        if (p[h][i][j] != 0) expansion += classes[h] * p[h][i][j];
      }
      if (!(expansion == prod)) throw InvariantViolation("intersection expansion does not reproduce A_i A_j");
    }
  }
  return p;
}

std::vector<std::size_t> transpose_map(const std::vector<Matrix>& classes) {
  std::vector<std::size_t> map(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Matrix t = classes[i].transpose();
    std::size_t match = kUnreachable;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (classes[k] == t) {
        match = k;
        break;
      }
    }
    if (match == kUnreachable) throw SchemeAxiomError("AS3", {i});
    map[i] = match;
  }
  return map;
}

bool vanishing_product_check(const Matrix& b, const DistanceStructure& ds) {
  const std::size_t big_d = ds.diameter;
  if (big_d <= 2) return true;
  const Matrix bt = b.transpose();
  const std::size_t n = ds.order;
  // D - j - 1 >= 2
  for (std::size_t j = 0; j + 3 <= big_d; ++j) {
    const Matrix prod = ds.classes[big_d - j] * bt;
    const std::size_t bound = big_d - j - 1;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (ds.distance(x, y) < bound && prod(x, y) != 0) return false;
      }
    }
  }
  return true;
}

bool class_distance_constancy(const SchemeCertificate& cert, const DistanceStructure& ds) {
  const std::size_t n = ds.order;
  for (const auto& a : cert.class_matrices) {
    if (a.order() != n) return false;
    std::size_t seen = kUnreachable;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (a(x, y) == 0) continue;
        if (seen == kUnreachable) {
          seen = ds.distance(x, y);
        } else if (ds.distance(x, y) != seen) {
          return false;
        }
      }
    }
  }
  return true;
}

SchemeCertificate detect_scheme(const Matrix& b) {
  SchemeCertificate cert;
  const auto cls = classify(b);
  cert.lambda = cls.lambda;
  if (!cls.nonnegative) return reject(std::move(cert), simple(RejectionCode::kNotNonnegative));
  if (!cls.irreducible) return reject(std::move(cert), simple(RejectionCode::kNotIrreducible));
  if (!cls.lambda) return reject(std::move(cert), simple(RejectionCode::kNotDoublyStochastic));
  if (*cls.lambda == 0) return reject(std::move(cert), simple(RejectionCode::kLambdaZero));
  cert.hoffman = hoffman_polynomial(b).h;
  if (!cls.normal) return reject(std::move(cert), simple(RejectionCode::kNotNormal));

  const DistanceStructure ds = distance_structure(underlying_digraph(b));
  const auto mp = minimal_polynomial(b);
  const std::size_t d = mp.degree() - 1;
  cert.d = d;
  cert.diameter = ds.diameter;
  if (d != ds.diameter) {
    RejectionReason r = simple(RejectionCode::kEigencountNeDiameter);
    r.d = d;
    r.diameter = ds.diameter;
    return reject(std::move(cert), std::move(r));
  }

  const PredistanceBasis basis = predistance_basis(b);
  cert.predistance = basis.polys;
  if (!(basis.evaluations[d] == ds.classes[d])) {
    return reject(std::move(cert), simple(RejectionCode::kAdNotPolynomial));
  }
  for (std::size_t i = 0; i <= d; ++i) {
    if (!(basis.evaluations[i] == ds.classes[i])) {
      return reject(std::move(cert), axiom_failure("CLASS_POLYNOMIAL", {i}));
    }
  }

  try {
    cert.class_matrices = ds.classes;
    cert.intersection_numbers = intersection_numbers(cert.class_matrices);
    cert.transpose_map = transpose_map(cert.class_matrices);
  } catch (const SchemeAxiomError& e) {
    return reject(std::move(cert), axiom_failure(e.axiom(), e.witness()));
  }

  const auto& p = cert.intersection_numbers;
  for (std::size_t h = 0; h <= d; ++h) {
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        if (!is_integer(p[h][i][j]) || p[h][i][j] < 0) {
          throw InvariantViolation("intersection number is not a nonnegative integer");
        }
        if (p[h][i][j] != p[h][j][i]) return reject(std::move(cert), axiom_failure("AS5", {h, i, j}));
      }
    }
  }

  cert.accepted = true;
  return cert;
}

}  // namespace schemeforge
