#include "dsq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "dsq/error.hpp"

namespace dsq {

Matrix::Matrix(int n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (n < 0 || data_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ContractError("matrix data does not match dimension");
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); })) {
    throw ContractError("matrix entries must be finite");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = rows.size();
  std::vector<double> data;
  data.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ContractError("matrix must be square");
    data.insert(data.end(), r.begin(), r.end());
  }
  *this = Matrix(static_cast<int>(n), std::move(data));
}

bool Matrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return x >= 0.0; });
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Matrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

std::vector<double> Matrix::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = (*this)(i, i);
  return d;
}

void Matrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    auto r = row(i);
    y[static_cast<std::size_t>(i)] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
  }
}

Matrix Matrix::squared() const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double a = data_[i * n + k];
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a * data_[k * n + j];
    }
  return Matrix(n_, std::move(out));
}

SymMatrix::SymMatrix(Matrix m) : Matrix(std::move(m)) {
  if (!is_symmetric()) throw ContractError("matrix is not symmetric");
}

namespace {

SymMatrix graph_matrix(const Graph& g, bool with_degrees) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> data(n * n, 0.0);
  for (auto [u, v] : g.edges()) {
    data[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1.0;
    data[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1.0;
  }
  if (with_degrees)
    for (std::size_t v = 0; v < n; ++v) data[v * n + v] = g.degree(static_cast<Vertex>(v));
  return SymMatrix(Matrix(g.order(), std::move(data)));
}

SymMatrix distance_based(const DistanceData& dd, bool with_transmissions) {
  const auto n = static_cast<std::size_t>(dd.n);
  std::vector<double> data(dd.dist.begin(), dd.dist.end());
  if (with_transmissions)
    for (std::size_t i = 0; i < n; ++i) data[i * n + i] = static_cast<double>(dd.transmissions[i]);
  return SymMatrix(Matrix(dd.n, std::move(data)));
}

}  // namespace

SymMatrix adjacency_matrix(const Graph& g) { return graph_matrix(g, false); }
SymMatrix signless_laplacian(const Graph& g) { return graph_matrix(g, true); }
SymMatrix distance_matrix(const DistanceData& dd) { return distance_based(dd, false); }
SymMatrix distance_signless_laplacian(const DistanceData& dd) { return distance_based(dd, true); }

SymMatrix add_row_sum_diagonal(const SymMatrix& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  auto data = a.data();
  auto sums = row_sums(a);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] += sums.values[i];
  return SymMatrix(Matrix(a.dim(), std::move(data)));
}

RowSums row_sums(const Matrix& m) {
  RowSums rs;
  const auto n = static_cast<std::size_t>(m.dim());
  rs.values.resize(n);
  for (int i = 0; i < m.dim(); ++i) {
    auto r = m.row(i);
    rs.values[static_cast<std::size_t>(i)] = std::accumulate(r.begin(), r.end(), 0.0);
  }
  rs.order.resize(n);
  std::iota(rs.order.begin(), rs.order.end(), 0);
  std::stable_sort(rs.order.begin(), rs.order.end(), [&](int a, int b) {
    return rs.values[static_cast<std::size_t>(a)] > rs.values[static_cast<std::size_t>(b)];
  });
  rs.sorted.reserve(n);
  for (int i : rs.order) rs.sorted.push_back(rs.values[static_cast<std::size_t>(i)]);
  return rs;
}

ExtremeEntries extreme_entries(const Matrix& m) {
  if (m.dim() < 2) throw ContractError("no off-diagonal entries");
  ExtremeEntries e{m(0, 0), m(0, 1)};
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      if (i == j) e.max_diagonal = std::max(e.max_diagonal, m(i, i));
      else e.max_off_diagonal = std::max(e.max_off_diagonal, m(i, j));
    }
  return e;
}

bool is_irreducible(const Matrix& m) {
  if (!m.is_nonnegative()) throw ContractError("irreducibility is defined here for nonnegative matrices");
  const int n = m.dim();
  if (n <= 1) return true;
  // Strongly connected iff vertex 0 reaches everything forwards and backwards.
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        double entry = transpose ? m(v, u) : m(u, v);
        if (v != u && entry > 0.0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reaches_all(false) && reaches_all(true);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  char buf[32];
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace dsq
