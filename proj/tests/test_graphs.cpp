#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kzl/graphs.hpp"
#include "support/generators.hpp"

using namespace kzl;

namespace {

Graph example_six() {
  return Graph(6, {{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {3, 6}});
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("closedness of a labeling") {
  CHECK(is_closed_labeling(Graph(3, {{1, 2}, {2, 3}})).closed);
  CHECK(is_closed_labeling(complete(5)).closed);
  auto check = is_closed_labeling(example_six());
  CHECK_FALSE(check.closed);
  CHECK(check.witness == std::array<int, 3>{3, 4, 6});
  // the claw is not closed under this labeling either
  auto claw = is_closed_labeling(Graph(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK_FALSE(claw.closed);
}

TEST_CASE("neighbor intervals") {
  Graph path(3, {{1, 2}, {2, 3}});
  auto nb = neighbor_intervals(path, 2);
  CHECK(nb.below == std::vector<int>{1});
  CHECK(nb.above == std::vector<int>{3});
  CHECK(nb.below_is_interval);
  CHECK(nb.above_is_interval);
  CHECK(nb.max_above == 3);

  auto k3 = neighbor_intervals(complete(3), 1);
  CHECK(k3.above == std::vector<int>{2, 3});
  CHECK(k3.max_above == 3);
  CHECK(k3.min_below_next == 1);  // N^<(2) = {1}

  CHECK_THROWS_AS(neighbor_intervals(path, 0), Error);
  CHECK_THROWS_AS(neighbor_intervals(path, 4), Error);
}

TEST_CASE("closed labelings have interval neighborhoods and interval cliques") {
  std::vector<Graph> pool = kzl::testing::all_connected_graphs(4);
  pool.push_back(Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}));
  pool.push_back(complete(6));
  pool.push_back(Graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}));
  int closed_seen = 0;
  for (const Graph& g : pool) {
    if (!is_connected(g) || !is_closed_labeling(g).closed) continue;
    ++closed_seen;
    for (int k = 1; k <= g.size(); ++k) {
      auto nb = neighbor_intervals(g, k);
      CHECK(nb.below_is_interval);
      CHECK(nb.above_is_interval);
    }
    for (const auto& clique : maximal_cliques(g))
      CHECK(clique.back() - clique.front() + 1 == static_cast<int>(clique.size()));
  }
  CHECK(closed_seen >= 8);
}

TEST_CASE("labeling search: relabeled path, exhaustive negative, complete graph") {
  // path presented as 2-1-3
  Graph scrambled(3, {{1, 2}, {1, 3}});
  auto found = find_closed_labeling(scrambled);
  REQUIRE(found.has_value());
  CHECK(is_closed_labeling(scrambled.relabeled(*found)).closed);
  // lexicographically least assignment: vertex 1 keeps label 1 if possible;
  // here 2-1-3 is already closed under (1,2,3)? vertex1 above-neighbors {2,3}
  // need edge {2,3}: absent, so label 1 cannot stay on a degree-2 hub start
  CHECK_FALSE(is_closed_labeling(scrambled).closed);

  CHECK_FALSE(find_closed_labeling(example_six()).has_value());

  auto id = find_closed_labeling(complete(4));
  REQUIRE(id.has_value());
  CHECK(*id == std::vector<int>{0, 1, 2, 3, 4});  // identity; slot 0 unused

  CHECK_THROWS_AS(find_closed_labeling(Graph(10, {}), 9), Error);
}

TEST_CASE("graphs reported unlabelable fail under random relabelings") {
  Graph g = example_six();
  kzl::testing::Rng rng(777);
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
  for (int round = 0; round < 100; ++round) {
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    CHECK_FALSE(is_closed_labeling(g.relabeled(perm)).closed);
  }
}

TEST_CASE("serial and parallel labeling search agree") {
  kzl::testing::Rng rng(191);
  for (int round = 0; round < 25; ++round) {
    Graph g = kzl::testing::random_connected_graph(rng, 6);
    auto serial = find_closed_labeling(g, 9, Exec::Serial);
    auto parallel = find_closed_labeling(g, 9, Exec::Parallel);
    CHECK(serial == parallel);
  }
}

TEST_CASE("completeness and connectivity") {
  CHECK(is_complete(complete(3)));
  CHECK_FALSE(is_complete(Graph(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_complete(example_six()));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_connected(example_six()));
  CHECK_FALSE(is_connected(Graph(3, {{1, 2}})));
}

TEST_CASE("maximal cliques via Bron-Kerbosch") {
  auto cliques = maximal_cliques(example_six());
  // triangle {2,3,4} plus the pendant edges
  std::vector<std::vector<int>> expected{{1, 2}, {2, 3, 4}, {3, 6}, {4, 5}};
  CHECK(cliques == expected);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), Error);
  // duplicate edges collapse
  Graph g(3, {{1, 2}, {2, 1}});
  CHECK(g.edges().size() == 1);
}
