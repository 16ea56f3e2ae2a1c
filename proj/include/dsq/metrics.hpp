#pragma once

#include <cstdint>
#include <vector>

#include "dsq/graph.hpp"

namespace dsq {

/// Exact shortest-path data of a connected graph.
struct DistanceData {
  int n = 0;
  /// Row-major n*n hop distances.
  std::vector<std::int64_t> dist;
  /// Transmission of each vertex: sum of its distances.
  std::vector<std::int64_t> transmissions;
  /// Second distance degree: sum over j of dist(i, j) * transmission(j).
  std::vector<std::int64_t> second_degrees;
  int diameter = 0;
  /// Transmissions nonincreasing, and the (stable) vertex order producing them.
  std::vector<std::int64_t> sorted_transmissions;
  std::vector<int> transmission_order;

  std::int64_t at(int i, int j) const { return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

/// BFS from every vertex. Throws ContractError("graph not connected") when a
/// vertex is unreachable, and for n < 2.
DistanceData all_pairs_distances(const Graph& g);

std::vector<std::int64_t> second_distance_degrees(const DistanceData& dd);

bool is_transmission_regular(const DistanceData& dd);
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);
/// Bipartite with every vertex in a part sharing that part's degree.
bool is_bipartite_semiregular(const Graph& g);

}  // namespace dsq
