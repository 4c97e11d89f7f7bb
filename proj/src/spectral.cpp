#include "schemeforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schemeforge/minpoly.hpp"

namespace schemeforge {
namespace {

using cd = std::complex<double>;

// Value and derivative of a polynomial given in ascending coefficients.
std::pair<cd, cd> horner_with_derivative(const std::vector<double>& c, cd z) {
  cd p = 0.0;
  cd dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double coefficient_norm(const std::vector<double>& c) {
  double s = 0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}

// Roots within sqrt(tol) of the real axis become real; every other root is
// averaged with the nearest unpaired conjugate.
void pair_conjugates(std::vector<cd>& z, double tol) {
  const std::size_t n = z.size();
  const double band = std::sqrt(tol);
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = true;
    const double scale = std::max(1.0, std::abs(z[i]));
    if (std::abs(z[i].imag()) <= band * scale) {
      z[i] = {z[i].real(), 0.0};
      continue;
    }
    std::size_t best = n;
    double best_dist = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      const double dist = std::abs(z[j] - std::conj(z[i]));
      if (best == n || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == n || best_dist > band * scale) continue;
    const double re = 0.5 * (z[i].real() + z[best].real());
    const double im = 0.5 * (std::abs(z[i].imag()) + std::abs(z[best].imag()));
    const double sign = z[i].imag() >= 0 ? 1.0 : -1.0;
    z[i] = {re, sign * im};
    z[best] = {re, -sign * im};
    done[best] = true;
  }
}

// Newton steps at 256-bit precision against the exact coefficients. Roots of
// a polynomial with clustered zeros are ill-conditioned with respect to the
// rounding of its coefficients to double, so the Aberth estimate can be far
// less accurate than a double allows. A refined root is only kept when it
// stays within `reach` of its starting point.
cd refine_root(const std::vector<Rational>& exact, cd z0, double reach) {
  constexpr mp_bitcnt_t kBits = 256;
  std::vector<mpf_class> c;
  for (const auto& v : exact) c.emplace_back(v, kBits);
  mpf_class zr(z0.real(), kBits), zi(z0.imag(), kBits);
  for (int it = 0; it < 8; ++it) {
    mpf_class pr(0, kBits), pi(0, kBits), dr(0, kBits), di(0, kBits);
    for (auto k = c.rbegin(); k != c.rend(); ++k) {
      const mpf_class ndr = dr * zr - di * zi + pr;
      const mpf_class ndi = dr * zi + di * zr + pi;
      const mpf_class npr = pr * zr - pi * zi + *k;
      const mpf_class npi = pr * zi + pi * zr;
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
    }
    const mpf_class den = dr * dr + di * di;
    if (den == 0) break;
    zr -= (pr * dr + pi * di) / den;
    zi -= (pi * dr - pr * di) / den;
  }
  const cd refined(zr.get_d(), zi.get_d());
  return std::abs(refined - z0) <= reach ? refined : z0;
}

}  // namespace

Spectrum roots(const Polynomial& m, double tol, std::size_t max_iter) {
  if (m.degree() < 1) throw PreconditionError("roots of a constant polynomial");
  const Polynomial monic = m.monic();
  std::vector<double> c;
  for (const auto& v : monic.coefficients()) c.push_back(to_double(v));
  const std::size_t n = c.size() - 1;

  Spectrum s;
  std::vector<cd> z(n);
  if (n == 1) {
    z[0] = -c[0];
  } else {
    // Fujiwara bound on the root moduli, circle centred on the root centroid.
    double radius = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      double term = std::pow(std::abs(c[n - k]), 1.0 / static_cast<double>(k));
      if (k == n) term = std::pow(std::abs(c[0]) / 2.0, 1.0 / static_cast<double>(n));
      radius = std::max(radius, 2.0 * term);
    }
    if (radius == 0) radius = 1;
    const cd centre = -c[n - 1] / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = centre + radius * std::polar(1.0, angle);
    }

    bool converged = false;
    for (s.iterations = 0; s.iterations < max_iter && !converged; ++s.iterations) {
      converged = true;
      for (std::size_t k = 0; k < n; ++k) {
        auto [p, dp] = horner_with_derivative(c, z[k]);
        if (p == 0.0) continue;
        const cd ratio = p / dp;
        cd repulsion = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        const cd step = ratio / (1.0 - ratio * repulsion);
        z[k] -= step;
        if (!(std::abs(step) <= tol * std::max(1.0, std::abs(z[k])))) converged = false;
      }
    }
    if (!converged) {
      s.eigenvalues = z;
      for (const auto& r : z) s.residuals.push_back(std::abs(horner_with_derivative(c, r).first) / coefficient_norm(c));
      throw ConvergenceError("root iteration did not converge in " + std::to_string(max_iter) + " sweeps", s);
    }
    for (auto& r : z) r = refine_root(monic.coefficients(), r, std::sqrt(tol) * std::max(1.0, std::abs(r)));
    pair_conjugates(z, tol);
  }

  std::sort(z.begin(), z.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  s.eigenvalues = z;
  for (const auto& r : z) s.residuals.push_back(std::abs(horner_with_derivative(c, r).first) / coefficient_norm(c));
  return s;
}

Spectrum spectrum_of(const Matrix& b, double tol, std::size_t max_iter) {
  return roots(squarefree_part(minimal_polynomial(b).m), tol, max_iter);
}

Eigen::MatrixXcd to_complex(const Matrix& b) {
  const auto n = static_cast<Eigen::Index>(b.order());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) m(x, y) = to_double(b(x, y));
  }
  return m;
}

double IdempotentFamily::worst() const {
  return std::max({orthogonality_residual, sum_residual, decomposition_residual, hermitian_residual});
}

namespace {
double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
}  // namespace

IdempotentFamily idempotents(const Matrix& b, const Spectrum& spectrum, double tol) {
  const auto& mu = spectrum.eigenvalues;
  const auto n = static_cast<Eigen::Index>(b.order());
  const Eigen::MatrixXcd bc = to_complex(b);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  IdempotentFamily f;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Eigen::MatrixXcd e = id;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (j == i) continue;
      const cd gap = mu[i] - mu[j];
      if (std::abs(gap) < tol) throw PreconditionError("spectrum is degenerate: two eigenvalues closer than tolerance");
      e = e * (bc - mu[j] * id) / gap;
    }
    f.idempotents.push_back(std::move(e));
  }

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto& ei = f.idempotents[i];
    sum += ei;
    recon += mu[i] * ei;
    f.hermitian_residual = std::max(f.hermitian_residual, max_abs(ei.adjoint() - ei));
    for (std::size_t j = 0; j < mu.size(); ++j) {
      Eigen::MatrixXcd prod = ei * f.idempotents[j];
      if (i == j) prod -= ei;
      f.orthogonality_residual = std::max(f.orthogonality_residual, max_abs(prod));
    }
  }
  f.sum_residual = max_abs(sum - id);
  f.decomposition_residual = max_abs(bc - recon);
  return f;
}

double power_identity_residual(const Matrix& b, const Spectrum& spectrum, const IdempotentFamily& family,
                               std::size_t h) {
  const auto n = static_cast<Eigen::Index>(b.order());
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd bc = to_complex(b);
  for (std::size_t k = 0; k < h; ++k) power = power * bc;
  Eigen::MatrixXcd recon = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    recon += std::pow(spectrum.eigenvalues[i], static_cast<int>(h)) * family.idempotents[i];
  }
  return max_abs(power - recon);
}

PerronReport perron_check(const Matrix& b, const Rational& lambda, const Spectrum& spectrum, double tol) {
  PerronReport r;
  r.lambda = to_double(lambda);
  const auto& mu = spectrum.eigenvalues;

  std::size_t nearest = mu.size();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    r.max_modulus = std::max(r.max_modulus, std::abs(mu[i]));
    const double dist = std::abs(mu[i] - r.lambda);
    if (nearest == mu.size() || dist < r.lambda_error) {
      nearest = i;
      r.lambda_error = dist;
    }
  }
  r.lambda_is_eigenvalue = nearest < mu.size() && r.lambda_error <= tol;
  r.lambda_dominates = r.lambda_is_eigenvalue && std::abs(r.max_modulus - r.lambda) <= tol;

  r.min_gap = mu.size() > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i != nearest && nearest < mu.size()) r.min_gap = std::min(r.min_gap, std::abs(mu[i] - mu[nearest]));
  }
  r.lambda_simple = r.lambda_is_eigenvalue && (mu.size() == 1 || r.min_gap > tol);

  r.row_sums_exact = true;
  for (std::size_t x = 0; x < b.order() && r.row_sums_exact; ++x) {
    Rational s = 0;
    for (std::size_t y = 0; y < b.order(); ++y) s += b(x, y);
    r.row_sums_exact = s == lambda;
  }
  return r;
}

}  // namespace schemeforge
