#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/linalg.hpp"

namespace dsq {

enum class Side { Lower, Upper };
std::string to_string(Side side);

/// Relative tolerance used for every bound/radius comparison.
inline constexpr double kBoundTolerance = 1e-8;
double bound_tolerance(double radius);
bool attains(double value, double radius);

/// One evaluated index (i, 1-based, in sorted order) or pair (i, j) of an
/// indexed or pairwise bound. `vertex`/`other` are the original vertex ids.
struct IndexDetail {
  int index = 0;
  int other_index = 0;  ///< second index of a pair; 0 for single-index bounds
  int vertex = -1;
  int other_vertex = -1;
  double value = 0.0;
  bool equality_predicted = false;
};

struct BoundValue {
  std::string name;
  Side side = Side::Upper;
  double value = 0.0;
  std::vector<IndexDetail> index_detail;
  /// Structural equality condition of the bound, evaluated exactly.
  bool equality_predicted = false;
  /// |value - radius| <= 1e-8 * max(1, radius); filled by observe().
  bool equality_observed = false;
  /// The equality condition is an "if and only if" that verification asserts in
  /// both directions. False where only predicted -> observed is sound.
  bool equality_iff = false;
};

void observe(BoundValue& bound, double radius);
/// Lower bound <= radius + tol, or upper bound >= radius - tol.
bool brackets(const BoundValue& bound, double radius);

struct NamedRadius {
  std::string name;
  double value;
};

struct BoundReport {
  std::string subject;               ///< graph or matrix label
  std::string target;                ///< name of the bounded radius, e.g. "delta1Q"
  double radius = 0.0;               ///< oracle value of the bounded radius
  std::vector<NamedRadius> radii;    ///< every radius the report computed, target first
  std::vector<BoundValue> bounds;
  bool sandwich_ok = false;

  const BoundValue& bound(const std::string& name) const;
  std::optional<double> radius_named(const std::string& name) const;
};

/// Observes every bound against report.radius and sets sandwich_ok.
void finalize(BoundReport& report);

// --- generic nonnegative-matrix bounds ---------------------------------------

/// min row sum <= lambda(m) <= max row sum. Equality predicted iff the row sums
/// are all equal (asserted as iff when m is irreducible).
std::pair<BoundValue, BoundValue> rowsum_sandwich(const Matrix& m);

/// lambda(A + diag(r)) <= lambda(A) + max r for symmetric nonnegative
/// irreducible A; lambda(A) comes from the Jacobi oracle.
BoundValue shifted_radius_bound(const SymMatrix& a);
BoundValue shifted_radius_bound(const SymMatrix& a, double lambda_a);

/// max over ordered pairs (i, j) of
///   (r_i + r_j + sqrt((r_i - r_j)^2 + 4 s_i s_j / (r_i r_j))) / 2
/// with r the row sums of A and s_i = sum_j a_ij r_j. Bounds lambda(A + diag(r))
/// for zero-diagonal nonnegative irreducible A. index_detail holds the
/// maximizing pair. Equality predicted when the row sums are all equal; the
/// converse is not asserted (bipartite semi-regular adjacency matrices attain
/// the bound with unequal row sums).
BoundValue psd_pairwise_bound(const SymMatrix& a);
/// Same formula from explicit r and s (r_i > 0).
BoundValue pairwise_bound_from(std::span<const double> r, std::span<const double> s);

/// (r_i + M - N + sqrt((r_i + N - M)^2 + 4 (i-1)(r_1 - r_i) N)) / 2 with r
/// sorted nonincreasing, M the largest diagonal and N the largest off-diagonal
/// entry; `index` is 1-based.
BoundValue indexed_diag_offdiag_bound(const Matrix& a, int index);
/// The bound at every index; value is the minimum over them.
BoundValue indexed_diag_offdiag_best(const Matrix& a);

/// Generic checks on B = A + diag(r) for a zero-diagonal A: row-sum
/// sandwich on B, shifted radius, pairwise and best indexed bound. Target is
/// lambda(B) from the Jacobi oracle.
BoundReport matrix_bounds(const SymMatrix& a, const std::string& subject);

// --- graph specializations -----------------------------------------------------

/// Bounds on q_1(G), the signless Laplacian spectral radius.
BoundReport q_bounds(const Graph& g, const std::string& subject = "G");
/// Bounds on the distance signless Laplacian spectral radius.
BoundReport dsl_bounds(const Graph& g, const std::string& subject = "G");
/// Transmission bounds on the distance spectral radius.
BoundReport distance_radius_bounds(const Graph& g, const std::string& subject = "G");

/// Exact distance signless Laplacian spectral radius for K_n, C_n and
/// K_{n/2,n/2}. Throws ContractError("no closed form") otherwise.
double closed_form_dsl(const FamilySpec& spec);
std::optional<double> try_closed_form_dsl(const FamilySpec& spec);

/// The star S_n against the degree-based pairwise bound.
struct StarCounterexample {
  int n = 0;
  double q1 = 0.0;
  bool bipartite_semiregular = false;
  bool regular = false;
  /// Pairwise bound with s_i = sum of neighbour degrees.
  double pairwise_bound = 0.0;
  /// Same formula with the neighbour-degree sums s_1 = n-1, s_k = 2n-3 (k >= 2).
  double quoted_pairwise_bound = 0.0;
  bool equality_observed = false;
  /// Equality condition "regular or bipartite semi-regular" agrees with observation.
  bool semiregular_condition_correct = false;
  /// Equality condition "regular" agrees with observation.
  bool regular_condition_correct = false;
};

StarCounterexample counterexample_star(int n);

}  // namespace dsq
