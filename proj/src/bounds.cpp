#include "dsq/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dsq/error.hpp"
#include "dsq/metrics.hpp"
#include "dsq/spectra.hpp"

namespace dsq {

std::string to_string(Side side) { return side == Side::Lower ? "lower" : "upper"; }

double bound_tolerance(double radius) { return kBoundTolerance * std::max(1.0, std::abs(radius)); }

bool attains(double value, double radius) { return std::abs(value - radius) <= bound_tolerance(radius); }

void observe(BoundValue& bound, double radius) { bound.equality_observed = attains(bound.value, radius); }

bool brackets(const BoundValue& bound, double radius) {
  const double tol = bound_tolerance(radius);
  return bound.side == Side::Lower ? bound.value <= radius + tol : bound.value >= radius - tol;
}

const BoundValue& BoundReport::bound(const std::string& name) const {
  for (const auto& b : bounds)
    if (b.name == name) return b;
  throw std::out_of_range("no bound named " + name);
}

std::optional<double> BoundReport::radius_named(const std::string& name) const {
  for (const auto& r : radii)
    if (r.name == name) return r.value;
  return std::nullopt;
}

void finalize(BoundReport& report) {
  report.sandwich_ok = true;
  for (auto& b : report.bounds) {
    observe(b, report.radius);
    report.sandwich_ok = report.sandwich_ok && brackets(b, report.radius);
  }
}

namespace {

template <class T>
bool all_equal(const std::vector<T>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

BoundValue make(std::string name, Side side, double value, bool predicted, bool iff) {
  BoundValue b;
  b.name = std::move(name);
  b.side = side;
  b.value = value;
  b.equality_predicted = predicted;
  b.equality_iff = iff;
  return b;
}

void require_nonnegative(const Matrix& m) {
  if (!m.is_nonnegative()) throw ContractError("bound needs a nonnegative matrix");
}

double indexed_value(double ri, double r1, double max_diag, double max_off, int index) {
  const double disc = (ri + max_off - max_diag) * (ri + max_off - max_diag) +
                      4.0 * (index - 1) * (r1 - ri) * max_off;
  return (ri + max_diag - max_off + std::sqrt(disc)) / 2.0;
}

// Equality in the indexed bound. When r_1 = r_i the bound collapses to the
// row-sum equality (all row sums equal). Otherwise the top i-1 rows (in
// sorted order) must carry M on the diagonal and N everywhere else in their
// row and column, with row sums constant on both blocks.
bool indexed_equality(const Matrix& a, const RowSums& rs, const ExtremeEntries& e, int index, bool irreducible) {
  if (!irreducible) return false;
  const auto i = static_cast<std::size_t>(index);
  if (index == 1 || rs.sorted[0] == rs.sorted[i - 1]) return all_equal(rs.values);
  for (std::size_t k = 1; k + 1 < i; ++k)
    if (rs.sorted[k] != rs.sorted[0]) return false;
  for (std::size_t k = i; k < rs.sorted.size(); ++k)
    if (rs.sorted[k] != rs.sorted[i - 1]) return false;
  for (std::size_t k = 0; k + 1 < i; ++k) {
    const int l = rs.order[k];
    if (a(l, l) != e.max_diagonal) return false;
    for (int j = 0; j < a.dim(); ++j)
      if (j != l && (a(l, j) != e.max_off_diagonal || a(j, l) != e.max_off_diagonal)) return false;
  }
  return true;
}

double pair_value(double ri, double rj, double si, double sj) {
  return (ri + rj + std::sqrt((ri - rj) * (ri - rj) + 4.0 * si * sj / (ri * rj))) / 2.0;
}

}  // namespace

std::pair<BoundValue, BoundValue> rowsum_sandwich(const Matrix& m) {
  require_nonnegative(m);
  const auto rs = row_sums(m);
  const bool irreducible = is_irreducible(m);
  const bool equal = all_equal(rs.values);
  return {make("L2.1-lower", Side::Lower, rs.sorted.back(), equal, irreducible),
          make("L2.1-upper", Side::Upper, rs.sorted.front(), equal, irreducible)};
}

BoundValue shifted_radius_bound(const SymMatrix& a) {
  return shifted_radius_bound(a, jacobi_eigenvalues(a).spectral_radius);
}

BoundValue shifted_radius_bound(const SymMatrix& a, double lambda_a) {
  require_nonnegative(a);
  if (!is_irreducible(a)) throw ContractError("shifted radius bound needs an irreducible matrix");
  const auto rs = row_sums(a);
  return make("T2.2", Side::Upper, lambda_a + rs.sorted.front(), all_equal(rs.values), true);
}

BoundValue pairwise_bound_from(std::span<const double> r, std::span<const double> s) {
  if (r.size() != s.size() || r.empty()) throw ContractError("pairwise bound needs equal, nonempty r and s");
  if (std::any_of(r.begin(), r.end(), [](double x) { return !(x > 0.0); })) {
    throw ContractError("pairwise bound needs positive row sums");
  }
  IndexDetail best;
  best.value = -1.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double v = pair_value(r[i], r[j], s[i], s[j]);
      if (v > best.value) {
        best.value = v;
        best.vertex = static_cast<int>(i);
        best.other_vertex = static_cast<int>(j);
      }
    }
  best.index = best.vertex + 1;
  best.other_index = best.other_vertex + 1;
  const bool equal = std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) == r.end();
  auto b = make("T2.6", Side::Upper, best.value, equal, false);
  best.equality_predicted = equal;
  b.index_detail.push_back(best);
  return b;
}

BoundValue psd_pairwise_bound(const SymMatrix& a) {
  require_nonnegative(a);
  for (int i = 0; i < a.dim(); ++i)
    if (a(i, i) != 0.0) throw ContractError("pairwise bound needs a zero diagonal");
  if (!is_irreducible(a)) throw ContractError("pairwise bound needs an irreducible matrix");
  if (!check_psd(add_row_sum_diagonal(a))) throw ContractError("A + diag(r) is not positive semidefinite");
  const auto rs = row_sums(a);
  std::vector<double> s(rs.values.size());
  a.multiply(rs.values, s);
  return pairwise_bound_from(rs.values, s);
}

BoundValue indexed_diag_offdiag_bound(const Matrix& a, int index) {
  require_nonnegative(a);
  if (index < 1 || index > a.dim()) throw ContractError("index out of range");
  const auto rs = row_sums(a);
  const auto e = extreme_entries(a);
  const auto i = static_cast<std::size_t>(index - 1);
  const bool predicted = indexed_equality(a, rs, e, index, is_irreducible(a));
  auto b = make("T2.10", Side::Upper, indexed_value(rs.sorted[i], rs.sorted[0], e.max_diagonal, e.max_off_diagonal, index),
                predicted, true);
  b.index_detail.push_back({index, 0, rs.order[i], -1, b.value, predicted});
  return b;
}

BoundValue indexed_diag_offdiag_best(const Matrix& a) {
  require_nonnegative(a);
  const auto rs = row_sums(a);
  const auto e = extreme_entries(a);
  const bool irreducible = is_irreducible(a);
  auto b = make("T2.10", Side::Upper, 0.0, false, true);
  for (int index = 1; index <= a.dim(); ++index) {
    const auto i = static_cast<std::size_t>(index - 1);
    const double v = indexed_value(rs.sorted[i], rs.sorted[0], e.max_diagonal, e.max_off_diagonal, index);
    const bool predicted = indexed_equality(a, rs, e, index, irreducible);
    b.index_detail.push_back({index, 0, rs.order[i], -1, v, predicted});
    b.value = index == 1 ? v : std::min(b.value, v);
    b.equality_predicted = b.equality_predicted || predicted;
  }
  return b;
}

BoundReport matrix_bounds(const SymMatrix& a, const std::string& subject) {
  const auto shifted = add_row_sum_diagonal(a);
  BoundReport report;
  report.subject = subject;
  report.target = "lambda(B)";
  report.radius = jacobi_eigenvalues(shifted).spectral_radius;
  const double lambda_a = jacobi_eigenvalues(a).spectral_radius;
  report.radii = {{"lambda(B)", report.radius}, {"lambda(A)", lambda_a}};
  auto [lower, upper] = rowsum_sandwich(shifted);
  report.bounds = {lower, upper, shifted_radius_bound(a, lambda_a), psd_pairwise_bound(a),
                   indexed_diag_offdiag_best(shifted)};
  finalize(report);
  return report;
}

BoundReport q_bounds(const Graph& g, const std::string& subject) {
  if (g.order() < 2 || !is_connected(g)) throw ContractError("graph not connected");
  const auto adjacency = adjacency_matrix(g);
  const auto q = signless_laplacian(g);
  const bool regular = is_regular(g);

  BoundReport report;
  report.subject = subject;
  report.target = "q1";
  report.radius = jacobi_eigenvalues(q).spectral_radius;
  const double lambda1 = jacobi_eigenvalues(adjacency).spectral_radius;
  report.radii = {{"q1", report.radius}, {"lambda1", lambda1}};

  const auto degrees = g.degrees();
  const int max_degree = *std::max_element(degrees.begin(), degrees.end());
  report.bounds.push_back(make("C2.3", Side::Upper, lambda1 + max_degree, regular, true));

  // s_i: sum of the neighbours' degrees.
  std::vector<double> r(degrees.begin(), degrees.end());
  std::vector<double> s(r.size(), 0.0);
  for (int v = 0; v < g.order(); ++v)
    for (auto u : g.neighbors(v)) s[static_cast<std::size_t>(v)] += degrees[static_cast<std::size_t>(u)];
  auto pairwise = pairwise_bound_from(r, s);
  pairwise.name = "C2.9";
  report.bounds.push_back(pairwise);

  // Indexed bound on Q in its degree form, with the stated equality family:
  // regular, or d_1 = ... = d_{i-1} = n-1 and d_i = ... = d_n.
  const auto sorted = degree_sequence(g);
  const int n = g.order();
  const double d1 = sorted[0];
  auto indexed = make("C2.11", Side::Upper, 0.0, false, true);
  std::vector<int> order(static_cast<std::size_t>(n));
  {
    const auto rs = row_sums(q);
    order = rs.order;
  }
  for (int index = 1; index <= n; ++index) {
    const double di = sorted[static_cast<std::size_t>(index - 1)];
    const double v = (2 * di + d1 - 1 + std::sqrt((2 * di + 1 - d1) * (2 * di + 1 - d1) + 8.0 * (index - 1) * (d1 - di))) / 2.0;
    bool predicted = regular;
    if (!predicted && index >= 2) {
      predicted = std::all_of(sorted.begin(), sorted.begin() + (index - 1), [&](int d) { return d == n - 1; }) &&
                  std::all_of(sorted.begin() + (index - 1), sorted.end(), [&](int d) { return d == sorted[static_cast<std::size_t>(index - 1)]; });
    }
    indexed.index_detail.push_back({index, 0, order[static_cast<std::size_t>(index - 1)], -1, v, predicted});
    indexed.value = index == 1 ? v : std::min(indexed.value, v);
    indexed.equality_predicted = indexed.equality_predicted || predicted;
  }
  report.bounds.push_back(indexed);

  finalize(report);
  return report;
}

BoundReport dsl_bounds(const Graph& g, const std::string& subject) {
  const auto dd = all_pairs_distances(g);
  const auto dist = distance_matrix(dd);
  const auto dq = distance_signless_laplacian(dd);
  const bool regular = is_transmission_regular(dd);

  BoundReport report;
  report.subject = subject;
  report.target = "delta1Q";
  report.radius = jacobi_eigenvalues(dq).spectral_radius;
  const double delta1 = jacobi_eigenvalues(dist).spectral_radius;
  report.radii = {{"delta1Q", report.radius}, {"delta1", delta1}};

  const double tmax = static_cast<double>(dd.sorted_transmissions.front());
  const double tmin = static_cast<double>(dd.sorted_transmissions.back());
  report.bounds.push_back(make("T3.2-lower", Side::Lower, 2 * tmin, regular, true));
  report.bounds.push_back(make("T3.2-upper", Side::Upper, 2 * tmax, regular, true));
  report.bounds.push_back(make("T3.4-lower", Side::Lower, tmax, false, false));
  report.bounds.push_back(make("T3.4-upper", Side::Upper, delta1 + tmax, regular, true));

  std::vector<double> r(dd.transmissions.begin(), dd.transmissions.end());
  std::vector<double> s(dd.second_degrees.begin(), dd.second_degrees.end());
  auto pairwise = pairwise_bound_from(r, s);
  pairwise.name = "T3.6";
  pairwise.equality_iff = true;
  report.bounds.push_back(pairwise);

  auto indexed = indexed_diag_offdiag_best(dq);
  indexed.name = "T3.7";
  report.bounds.push_back(indexed);

  // D_i + T_i / D_i, compared exactly as (D_i^2 + T_i) / D_i.
  std::vector<double> ratio(r.size());
  std::vector<double> squares(r.size());
  bool ratio_constant = true;
  bool square_constant = true;
  const auto& tr = dd.transmissions;
  const auto& t2 = dd.second_degrees;
  for (std::size_t i = 0; i < r.size(); ++i) {
    ratio[i] = r[i] + s[i] / r[i];
    squares[i] = std::sqrt(2.0 * s[i] + 2.0 * r[i] * r[i]);
    ratio_constant = ratio_constant && (tr[i] * tr[i] + t2[i]) * tr[0] == (tr[0] * tr[0] + t2[0]) * tr[i];
    square_constant = square_constant && t2[i] + tr[i] * tr[i] == t2[0] + tr[0] * tr[0];
  }
  auto [rmin, rmax] = std::minmax_element(ratio.begin(), ratio.end());
  report.bounds.push_back(make("T3.8-lower", Side::Lower, *rmin, ratio_constant, true));
  report.bounds.push_back(make("T3.8-upper", Side::Upper, *rmax, ratio_constant, true));
  auto [smin, smax] = std::minmax_element(squares.begin(), squares.end());
  report.bounds.push_back(make("T3.9-lower", Side::Lower, *smin, square_constant, true));
  report.bounds.push_back(make("T3.9-upper", Side::Upper, *smax, square_constant, true));

  finalize(report);
  return report;
}

BoundReport distance_radius_bounds(const Graph& g, const std::string& subject) {
  const auto dd = all_pairs_distances(g);
  const bool regular = is_transmission_regular(dd);
  BoundReport report;
  report.subject = subject;
  report.target = "delta1";
  report.radius = jacobi_eigenvalues(distance_matrix(dd)).spectral_radius;
  report.radii = {{"delta1", report.radius}};
  report.bounds.push_back(make("T3.1-lower", Side::Lower, static_cast<double>(dd.sorted_transmissions.back()), regular, true));
  report.bounds.push_back(make("T3.1-upper", Side::Upper, static_cast<double>(dd.sorted_transmissions.front()), regular, true));
  finalize(report);
  return report;
}

std::optional<double> try_closed_form_dsl(const FamilySpec& spec) {
  const double n = spec.n;
  switch (spec.kind) {
    case FamilyKind::Complete:
      if (spec.n >= 2) return 2.0 * (n - 1);
      break;
    case FamilyKind::Cycle:
      if (spec.n >= 3) return spec.n % 2 ? (n * n - 1) / 2.0 : n * n / 2.0;
      break;
    case FamilyKind::CompleteBipartite:
      if (spec.n % 2 == 0 && 2 * spec.a == spec.n) return 3.0 * n - 4;
      break;
    default:
      break;
  }
  return std::nullopt;
}

double closed_form_dsl(const FamilySpec& spec) {
  if (auto v = try_closed_form_dsl(spec)) return *v;
  throw ContractError("no closed form");
}

StarCounterexample counterexample_star(int n) {
  if (n < 3) throw ContractError("counterexample needs n >= 3");
  const auto star = generate_family({FamilyKind::Star, n});
  StarCounterexample out;
  out.n = n;
  out.q1 = jacobi_eigenvalues(signless_laplacian(star)).spectral_radius;
  out.bipartite_semiregular = is_bipartite_semiregular(star);
  out.regular = is_regular(star);
  out.pairwise_bound = q_bounds(star).bound("C2.9").value;

  std::vector<double> r(static_cast<std::size_t>(n), 1.0);
  std::vector<double> s(static_cast<std::size_t>(n), 2.0 * n - 3);
  r[0] = n - 1;
  s[0] = n - 1;
  out.quoted_pairwise_bound = pairwise_bound_from(r, s).value;

  out.equality_observed = attains(out.pairwise_bound, out.q1);
  out.semiregular_condition_correct = (out.regular || out.bipartite_semiregular) == out.equality_observed;
  out.regular_condition_correct = out.regular == out.equality_observed;
  return out;
}

}  // namespace dsq
