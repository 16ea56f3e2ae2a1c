#include <doctest.h>

#include <sstream>

#include "dsq/error.hpp"
#include "dsq/linalg.hpp"

using namespace dsq;

namespace {
Graph family(FamilyKind kind, int n, int a = 0) { return generate_family({kind, n, a}); }
}  // namespace

TEST_CASE("graph matrices") {
  CHECK(adjacency_matrix(family(FamilyKind::Complete, 2)) == Matrix{{0, 1}, {1, 0}});
  CHECK(adjacency_matrix(family(FamilyKind::Path, 3)) == Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(adjacency_matrix(Graph(1, {})) == Matrix{{0}});

  CHECK(signless_laplacian(family(FamilyKind::Complete, 2)) == Matrix{{1, 1}, {1, 1}});
  CHECK(signless_laplacian(family(FamilyKind::Path, 3)) == Matrix{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}});
  CHECK(signless_laplacian(family(FamilyKind::Cycle, 4)) == Matrix{{2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, 2, 1}, {1, 0, 1, 2}});

  auto dsl = [](const Graph& g) { return distance_signless_laplacian(all_pairs_distances(g)); };
  CHECK(dsl(family(FamilyKind::Complete, 2)) == Matrix{{1, 1}, {1, 1}});
  CHECK(dsl(family(FamilyKind::Path, 3)) == Matrix{{3, 1, 2}, {1, 2, 1}, {2, 1, 3}});
  CHECK(dsl(family(FamilyKind::Complete, 3)) == Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
}

TEST_CASE("row sums") {
  auto p3 = row_sums(distance_signless_laplacian(all_pairs_distances(family(FamilyKind::Path, 3))));
  CHECK(p3.values == std::vector<double>{6, 4, 6});
  CHECK(p3.sorted == std::vector<double>{6, 6, 4});
  CHECK(p3.order == std::vector<int>{0, 2, 1});
  CHECK(row_sums(signless_laplacian(family(FamilyKind::Cycle, 4))).values == std::vector<double>(4, 4));
  CHECK(row_sums(Matrix{{0, 2}, {3, 0}}).values == std::vector<double>{2, 3});
}

TEST_CASE("row sum identities on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_connected(6 + static_cast<int>(seed % 15), 0.3, seed);
    auto dd = all_pairs_distances(g);
    auto dq = row_sums(distance_signless_laplacian(dd));
    auto q = row_sums(signless_laplacian(g));
    for (int i = 0; i < g.order(); ++i) {
      CHECK(dq.values[static_cast<std::size_t>(i)] == 2.0 * static_cast<double>(dd.transmissions[static_cast<std::size_t>(i)]));
      CHECK(q.values[static_cast<std::size_t>(i)] == 2.0 * g.degree(i));
    }
  }
}

TEST_CASE("extreme entries") {
  auto p3 = extreme_entries(distance_signless_laplacian(all_pairs_distances(family(FamilyKind::Path, 3))));
  CHECK(p3.max_diagonal == 3);
  CHECK(p3.max_off_diagonal == 2);
  auto s4 = extreme_entries(signless_laplacian(family(FamilyKind::Star, 4)));
  CHECK(s4.max_diagonal == 3);
  CHECK(s4.max_off_diagonal == 1);
  auto diag = extreme_entries(Matrix{{5, 0}, {0, 5}});
  CHECK(diag.max_diagonal == 5);
  CHECK(diag.max_off_diagonal == 0);
  CHECK_THROWS_WITH_AS(extreme_entries(Matrix{{1}}), "no off-diagonal entries", ContractError);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(distance_signless_laplacian(all_pairs_distances(family(FamilyKind::Cycle, 7)))));
  CHECK_FALSE(is_irreducible(Matrix{{1, 0}, {0, 1}}));
  CHECK(is_irreducible(adjacency_matrix(family(FamilyKind::Path, 3))));
  // A one-way cycle is strongly connected; a one-way edge is not.
  CHECK(is_irreducible(Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK_FALSE(is_irreducible(Matrix{{0, 1}, {0, 0}}));
  CHECK_THROWS_AS(is_irreducible(Matrix{{0, -1}, {-1, 0}}), ContractError);
}

TEST_CASE("matrix construction contracts") {
  CHECK_THROWS_AS(SymMatrix(Matrix{{0, 2}, {3, 0}}), ContractError);
  CHECK_THROWS_AS(Matrix(2, {1.0, 2.0, 3.0}), ContractError);
  CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), ContractError);
  CHECK(add_row_sum_diagonal(adjacency_matrix(family(FamilyKind::Star, 4))) == signless_laplacian(family(FamilyKind::Star, 4)));
}

TEST_CASE("matrix dump uses 17 significant digits") {
  std::ostringstream out;
  write_matrix(out, Matrix{{0.1, 2}, {2, 1.0 / 3.0}});
  CHECK(out.str() == "0.10000000000000001 2\n2 0.33333333333333331\n");
}
