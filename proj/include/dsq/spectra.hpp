#pragma once

#include <span>
#include <vector>

#include "dsq/linalg.hpp"

namespace dsq {

struct SpectrumResult {
  std::vector<double> eigenvalues;    ///< nonincreasing; empty for power iteration
  double spectral_radius = 0.0;
  std::vector<double> perron_vector;  ///< positive, unit norm; empty when not computed
  int iterations = 0;                 ///< sweeps (Jacobi) or multiplications (power)
  double residual = 0.0;
  bool used_fallback = false;         ///< power iteration handed off to Jacobi
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// 1e-12 * ||m||_F. With `want_perron_vector` the eigenvector of the top
/// eigenvalue is accumulated and returned sign-normalized.
/// Throws SolverError after 100 sweeps.
SpectrumResult jacobi_eigenvalues(const SymMatrix& m, bool want_perron_vector = false);

/// Perron root of a nonnegative irreducible matrix by normalized power
/// iteration from the all-ones vector. Matrices with a zero diagonal entry are
/// shifted by ||m||_inf so the Perron root dominates (bipartite adjacency
/// matrices have -lambda in their spectrum). Falls back to Jacobi after 100000
/// iterations (symmetric input only). Throws ContractError on reducible or
/// negative input.
SpectrumResult power_spectral_radius(const Matrix& m);

/// Minimum Jacobi eigenvalue >= -1e-9 * max(1, ||m||_F).
bool check_psd(const SymMatrix& m);

/// Every prefix sum of `spectrum` dominates that of `diagonal` and the totals
/// agree, both to 1e-9 * max(1, sum |x|). Inputs are sorted nonincreasing
/// first. Throws ContractError on length mismatch.
bool majorization_check(std::span<const double> spectrum, std::span<const double> diagonal);

}  // namespace dsq
