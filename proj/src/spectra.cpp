#include "dsq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "dsq/error.hpp"

namespace dsq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr int kMaxPowerIterations = 100000;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

double norm2(std::span<const double> v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

}  // namespace

SpectrumResult jacobi_eigenvalues(const SymMatrix& m, bool want_perron_vector) {
  const auto n = static_cast<std::size_t>(m.dim());
  std::vector<double> a = m.data();
  std::vector<double> v;
  if (want_perron_vector) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double target = 1e-12 * m.frobenius_norm();

  SpectrumResult result;
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  for (; off > target; ++sweep) {
    if (sweep == kMaxSweeps) {
      throw SolverError("Jacobi did not converge in 100 sweeps (off-diagonal norm " + std::to_string(off) + ")", off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[p * n + k];
          const double akq = a[q * n + k];
          a[p * n + k] = c * akp - s * akq;
          a[q * n + k] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (want_perron_vector) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a[i * n + i];
  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (result.eigenvalues[i] > result.eigenvalues[top]) top = i;
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), std::greater<>());
  result.spectral_radius = n ? result.eigenvalues.front() : 0.0;
  result.iterations = sweep;
  result.residual = off;
  if (want_perron_vector && n) {
    result.perron_vector.resize(n);
    for (std::size_t k = 0; k < n; ++k) result.perron_vector[k] = v[k * n + top];
    const double sum = std::accumulate(result.perron_vector.begin(), result.perron_vector.end(), 0.0);
    if (sum < 0.0)
      for (double& x : result.perron_vector) x = -x;
  }
  return result;
}

SpectrumResult power_spectral_radius(const Matrix& m) {
  if (!is_irreducible(m)) throw ContractError("power iteration needs an irreducible matrix");
  const auto n = static_cast<std::size_t>(m.dim());
  const auto diag = m.diagonal();
  const double shift = std::any_of(diag.begin(), diag.end(), [](double d) { return d == 0.0; }) ? m.inf_norm() : 0.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda = 0.0;
  double previous = -1.0;
  SpectrumResult result;
  for (int it = 1; it <= kMaxPowerIterations; ++it) {
    m.multiply(x, y);
    lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    residual = std::sqrt(residual);

    const double scale = std::max(std::abs(lambda), 1e-300);
    if (std::abs(lambda - previous) <= 1e-13 * scale && residual <= 1e-10 * scale) {
      result.spectral_radius = lambda;
      result.perron_vector = x;
      result.iterations = it;
      result.residual = residual;
      return result;
    }
    previous = lambda;
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
    const double norm = norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }

  if (!m.is_symmetric()) throw SolverError("power iteration did not converge", 0.0);
  auto fallback = jacobi_eigenvalues(SymMatrix(m), true);
  fallback.used_fallback = true;
  fallback.eigenvalues.clear();
  fallback.iterations = kMaxPowerIterations;
  return fallback;
}

bool check_psd(const SymMatrix& m) {
  if (m.dim() == 0) return true;
  const auto spectrum = jacobi_eigenvalues(m);
  return spectrum.eigenvalues.back() >= -1e-9 * std::max(1.0, m.frobenius_norm());
}

bool majorization_check(std::span<const double> spectrum, std::span<const double> diagonal) {
  if (spectrum.size() != diagonal.size()) throw ContractError("majorization needs sequences of equal length");
  std::vector<double> a(spectrum.begin(), spectrum.end());
  std::vector<double> b(diagonal.begin(), diagonal.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double scale = 0.0;
  for (double x : a) scale += std::abs(x);
  const double tol = 1e-9 * std::max(1.0, scale);
  double prefix_a = 0.0;
  double prefix_b = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    prefix_a += a[k];
    prefix_b += b[k];
    if (prefix_a < prefix_b - tol) return false;
  }
  return std::abs(prefix_a - prefix_b) <= tol;
}

}  // namespace dsq
