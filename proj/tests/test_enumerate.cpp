#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coveralg/enumerate.hpp"

using namespace coveralg;

TEST_CASE("edge mask round trip") {
  for (const SimpleGraph& g : {cycle_graph(5), complete_graph(4), path_graph(6)})
    CHECK(graph_from_mask(g.n, edge_mask(g)) == g);
}

TEST_CASE("canonical mask is a relabeling invariant") {
  // P_4 labeled two ways
  SimpleGraph a(4, {{1, 2}, {2, 3}, {3, 4}});
  SimpleGraph b(4, {{1, 3}, {2, 4}, {1, 4}});  // 3-1-4-2 path
  CHECK(canonical_mask(4, edge_mask(a)) == canonical_mask(4, edge_mask(b)));
  // P_4 vs star are not isomorphic
  SimpleGraph s(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(canonical_mask(4, edge_mask(a)) != canonical_mask(4, edge_mask(s)));
}

TEST_CASE("labeled tree counts follow Cayley's formula") {
  CHECK(labeled_trees(2).size() == 1);
  CHECK(labeled_trees(3).size() == 3);
  CHECK(labeled_trees(4).size() == 16);
  CHECK(labeled_trees(5).size() == 125);
  CHECK(labeled_trees(6).size() == 1296);
  for (const auto& t : labeled_trees(5)) {
    CHECK(t.edges.size() == 4);
    CHECK(structure(t).is_forest);
    CHECK(structure(t).is_connected);
  }
}

TEST_CASE("tree isomorphism class counts") {
  int expect[] = {0, 1, 1, 1, 2, 3, 6, 11};
  for (int n = 1; n <= 7; ++n) CHECK((int)trees_up_to_iso(n).size() == expect[n]);
}

TEST_CASE("connected graph isomorphism class counts") {
  int expect[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n)
    CHECK((int)connected_graphs_up_to_iso(n).size() == expect[n]);
}

TEST_CASE("connected labeled graph counts") {
  // OEIS-free check: 1, 1, 4, 38 for n = 1..4
  CHECK(connected_labeled_graphs(1).size() == 1);
  CHECK(connected_labeled_graphs(2).size() == 1);
  CHECK(connected_labeled_graphs(3).size() == 4);
  CHECK(connected_labeled_graphs(4).size() == 38);
}

TEST_CASE("random connected graphs are connected and reproducible") {
  auto a = random_connected_graphs(6, 10, 42);
  auto b = random_connected_graphs(6, 10, 42);
  REQUIRE(a.size() == 10);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == b[k]);
    CHECK(structure(a[k]).is_connected);
  }
  auto c = random_connected_graphs(6, 10, 43);
  CHECK(a != c);
}

TEST_CASE("cycle detection") {
  CHECK(has_cycle_of_length(cycle_graph(6), 6));
  CHECK_FALSE(has_cycle_of_length(cycle_graph(6), 4));
  CHECK_FALSE(has_cycle_of_length(cycle_graph(6), 3));
  CHECK(has_cycle_of_length(complete_graph(4), 3));
  CHECK(has_cycle_of_length(complete_graph(4), 4));
  CHECK_FALSE(has_cycle_of_length(path_graph(5), 3));
  CHECK(shortest_even_cycle(cycle_graph(6)) == 6);
  CHECK(shortest_even_cycle(complete_graph(4)) == 4);
  CHECK(shortest_even_cycle(cycle_graph(5)) == 0);
  CHECK(shortest_even_cycle(path_graph(7)) == 0);
}
