#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dsq/error.hpp"
#include "dsq/metrics.hpp"
#include "dsq/rng.hpp"
#include "oracle.hpp"

using namespace dsq;

namespace {
Graph family(FamilyKind kind, int n, int a = 0) { return generate_family({kind, n, a}); }
}  // namespace

TEST_CASE("distances of small graphs") {
  auto p3 = all_pairs_distances(family(FamilyKind::Path, 3));
  CHECK(std::vector<std::int64_t>{p3.at(0, 0), p3.at(0, 1), p3.at(0, 2)} == std::vector<std::int64_t>{0, 1, 2});
  CHECK(p3.transmissions == std::vector<std::int64_t>{3, 2, 3});
  CHECK(p3.diameter == 2);
  CHECK(p3.sorted_transmissions == std::vector<std::int64_t>{3, 3, 2});
  CHECK(p3.transmission_order == std::vector<int>{0, 2, 1});

  auto k4 = all_pairs_distances(family(FamilyKind::Complete, 4));
  CHECK(k4.transmissions == std::vector<std::int64_t>(4, 3));
  CHECK(k4.diameter == 1);

  auto c5 = all_pairs_distances(family(FamilyKind::Cycle, 5));
  CHECK(c5.transmissions == std::vector<std::int64_t>(5, 6));
  CHECK(c5.diameter == 2);

  CHECK_THROWS_WITH_AS(all_pairs_distances(Graph(3, {{0, 1}})), "graph not connected", ContractError);
}

TEST_CASE("second distance degrees") {
  CHECK(all_pairs_distances(family(FamilyKind::Path, 3)).second_degrees == std::vector<std::int64_t>{8, 6, 8});
  CHECK(all_pairs_distances(family(FamilyKind::Complete, 3)).second_degrees == std::vector<std::int64_t>(3, 4));
  CHECK(all_pairs_distances(family(FamilyKind::Cycle, 4)).second_degrees == std::vector<std::int64_t>(4, 16));
}

TEST_CASE("complete graph transmissions and second degrees") {
  for (int n = 2; n <= 50; ++n) {
    auto dd = all_pairs_distances(family(FamilyKind::Complete, n));
    const std::int64_t m = n - 1;
    CHECK(dd.transmissions == std::vector<std::int64_t>(static_cast<std::size_t>(n), m));
    CHECK(dd.second_degrees == std::vector<std::int64_t>(static_cast<std::size_t>(n), m * m));
  }
}

TEST_CASE("regularity predicates") {
  CHECK(is_transmission_regular(all_pairs_distances(family(FamilyKind::Cycle, 6))));
  CHECK_FALSE(is_transmission_regular(all_pairs_distances(family(FamilyKind::Path, 3))));
  auto k23 = all_pairs_distances(family(FamilyKind::CompleteBipartite, 5, 2));
  CHECK_FALSE(is_transmission_regular(k23));
  CHECK(k23.transmissions == std::vector<std::int64_t>{5, 5, 6, 6, 6});

  CHECK(is_regular(family(FamilyKind::Cycle, 7)));
  CHECK_FALSE(is_regular(family(FamilyKind::Star, 5)));
  CHECK(is_regular(family(FamilyKind::CompleteBipartite, 6, 3)));

  CHECK(is_bipartite_semiregular(family(FamilyKind::Star, 6)));
  CHECK(is_bipartite_semiregular(family(FamilyKind::CompleteBipartite, 7, 3)));
  CHECK(is_bipartite_semiregular(family(FamilyKind::Cycle, 6)));
  CHECK_FALSE(is_bipartite_semiregular(family(FamilyKind::Cycle, 5)));
  CHECK_FALSE(is_bipartite_semiregular(family(FamilyKind::Path, 5)));
}

TEST_CASE("distance data agrees with Floyd-Warshall and satisfies its invariants") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 17);
    auto g = random_connected(n, 0.3, seed);
    auto dd = all_pairs_distances(g);
    auto fw = oracle::floyd_warshall(g);
    std::int64_t upper_sum = 0;
    int diameter = 0;
    for (int i = 0; i < n; ++i) {
      std::int64_t t = 0;
      for (int j = 0; j < n; ++j) {
        REQUIRE(dd.at(i, j) == fw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        CHECK(dd.at(i, j) == dd.at(j, i));
        if (i != j) CHECK((dd.at(i, j) >= 1 && dd.at(i, j) <= dd.diameter));
        if (j > i) upper_sum += dd.at(i, j);
        diameter = std::max<int>(diameter, static_cast<int>(dd.at(i, j)));
        for (int k = 0; k < n; ++k) CHECK(dd.at(i, k) <= dd.at(i, j) + dd.at(j, k));
        t += dd.at(i, j);
      }
      CHECK(dd.transmissions[static_cast<std::size_t>(i)] == t);
    }
    CHECK(std::accumulate(dd.transmissions.begin(), dd.transmissions.end(), std::int64_t{0}) == 2 * upper_sum);
    CHECK(dd.diameter == diameter);
    CHECK((dd.diameter == 1) == is_complete(g));
  }
}

TEST_CASE("transmissions are invariant under relabeling") {
  Xoshiro256 rng(11);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_connected(14, 0.35, seed);
    std::vector<int> perm(14);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);
    std::vector<Edge> relabeled;
    for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    auto a = all_pairs_distances(g);
    auto b = all_pairs_distances(Graph(14, relabeled));
    CHECK(a.sorted_transmissions == b.sorted_transmissions);
    for (int v = 0; v < 14; ++v) {
      CHECK(a.transmissions[static_cast<std::size_t>(v)] == b.transmissions[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
      CHECK(a.second_degrees[static_cast<std::size_t>(v)] == b.second_degrees[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
    }
  }
}
