#include "dsq/metrics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "dsq/error.hpp"

namespace dsq {

namespace {

void bfs_row(const Graph& g, int source, std::int64_t* row) {
  const int n = g.order();
  std::fill(row, row + n, std::int64_t{-1});
  std::queue<Vertex> frontier;
  row[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop();
    for (auto v : g.neighbors(u)) {
      if (row[v] < 0) {
        row[v] = row[u] + 1;
        frontier.push(v);
      }
    }
  }
}

}  // namespace

DistanceData all_pairs_distances(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ContractError("distance data needs n >= 2");
  DistanceData dd;
  dd.n = n;
  const auto un = static_cast<std::size_t>(n);
  dd.dist.assign(un * un, 0);
  for (int s = 0; s < n; ++s) bfs_row(g, s, dd.dist.data() + static_cast<std::size_t>(s) * un);
  if (std::any_of(dd.dist.begin(), dd.dist.end(), [](auto d) { return d < 0; })) {
    throw ContractError("graph not connected");
  }

  dd.transmissions.resize(un);
  for (std::size_t i = 0; i < un; ++i) {
    auto row = dd.dist.begin() + static_cast<std::ptrdiff_t>(i * un);
    dd.transmissions[i] = std::accumulate(row, row + n, std::int64_t{0});
  }
  dd.diameter = static_cast<int>(*std::max_element(dd.dist.begin(), dd.dist.end()));
  dd.second_degrees = second_distance_degrees(dd);

  dd.transmission_order.resize(un);
  std::iota(dd.transmission_order.begin(), dd.transmission_order.end(), 0);
  std::stable_sort(dd.transmission_order.begin(), dd.transmission_order.end(),
                   [&](int a, int b) { return dd.transmissions[static_cast<std::size_t>(a)] > dd.transmissions[static_cast<std::size_t>(b)]; });
  dd.sorted_transmissions.reserve(un);
  for (int v : dd.transmission_order) dd.sorted_transmissions.push_back(dd.transmissions[static_cast<std::size_t>(v)]);
  return dd;
}

// T_i = sum_j d_ij * D_j. The alternative index reading (sum_j d_ij * D_i = D_i^2)
// does not bound the spectral radius on P_3.
std::vector<std::int64_t> second_distance_degrees(const DistanceData& dd) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(dd.n), 0);
  for (int i = 0; i < dd.n; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < dd.n; ++j) sum += dd.at(i, j) * dd.transmissions[static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(i)] = sum;
  }
  return t;
}

bool is_transmission_regular(const DistanceData& dd) {
  const auto& t = dd.transmissions;
  return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
}

bool is_regular(const Graph& g) {
  auto d = g.degrees();
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

bool is_bipartite_semiregular(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> part_degree{-1, -1};
  for (int start = 0; start < n; ++start) {
    if (side[static_cast<std::size_t>(start)] >= 0) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      auto u = frontier.front();
      frontier.pop();
      for (auto v : g.neighbors(u)) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv < 0) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          frontier.push(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& expected = part_degree[static_cast<std::size_t>(side[static_cast<std::size_t>(v)])];
    if (expected < 0) expected = g.degree(v);
    else if (expected != g.degree(v)) return false;
  }
  return true;
}

}  // namespace dsq
