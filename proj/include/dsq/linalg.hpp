#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "dsq/graph.hpp"
#include "dsq/metrics.hpp"

namespace dsq {

/// Dense square matrix of doubles, row-major, immutable after construction.
class Matrix {
 public:
  Matrix() = default;
  /// Throws ContractError if data.size() != n*n or an entry is not finite.
  Matrix(int n, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  int dim() const noexcept { return n_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  const std::vector<double>& data() const noexcept { return data_; }

  bool is_symmetric() const;
  bool is_nonnegative() const;
  double trace() const;
  double frobenius_norm() const;
  /// Largest absolute row sum.
  double inf_norm() const;
  std::vector<double> diagonal() const;
  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;
  Matrix squared() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

/// A Matrix whose symmetry has been checked exactly at construction.
class SymMatrix : public Matrix {
 public:
  SymMatrix() = default;
  /// Throws ContractError when m is not exactly symmetric.
  explicit SymMatrix(Matrix m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows) : SymMatrix(Matrix(rows)) {}
};

SymMatrix adjacency_matrix(const Graph& g);
/// Q = D + A.
SymMatrix signless_laplacian(const Graph& g);
SymMatrix distance_matrix(const DistanceData& dd);
/// Transmission diagonal plus distance matrix.
SymMatrix distance_signless_laplacian(const DistanceData& dd);
/// A + diag(row sums of A).
SymMatrix add_row_sum_diagonal(const SymMatrix& a);

struct RowSums {
  std::vector<double> values;  ///< indexed by row
  std::vector<double> sorted;  ///< nonincreasing
  std::vector<int> order;      ///< sorted[k] == values[order[k]]; stable on ties
};

RowSums row_sums(const Matrix& m);

struct ExtremeEntries {
  double max_diagonal;
  double max_off_diagonal;
};

/// Throws ContractError("no off-diagonal entries") for n < 2.
ExtremeEntries extreme_entries(const Matrix& m);

/// Strong connectivity of the off-diagonal nonzero pattern. Throws
/// ContractError on a negative entry.
bool is_irreducible(const Matrix& m);

/// One row per line, entries separated by spaces, 17 significant digits.
void write_matrix(std::ostream& out, const Matrix& m);

}  // namespace dsq
