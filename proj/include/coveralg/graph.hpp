#ifndef COVERALG_GRAPH_HPP
#define COVERALG_GRAPH_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "coveralg/monomial.hpp"

namespace coveralg {

using Edge = std::pair<int, int>;  // 1-based, first < second

struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;  // canonical: i < j, lexicographically sorted

  SimpleGraph() = default;
  SimpleGraph(int n_, std::vector<Edge> e);

  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> adjacency() const;  // 1-based neighbor lists
  bool operator==(const SimpleGraph& o) const { return n == o.n && edges == o.edges; }
};

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int len);
SimpleGraph path_graph(int n);
SimpleGraph star_graph(int n);
SimpleGraph complete_multipartite(const std::vector<int>& parts);

// All minimal vertex covers, each the complement of a maximal independent
// set; deterministic order (sorted as vertex sets).
std::vector<std::vector<int>> minimal_vertex_covers(const SimpleGraph& g);

MonomialIdeal cover_ideal(const SimpleGraph& g);
MonomialIdeal cover_ideal(const SimpleGraph& g, RingPtr ring);
MonomialIdeal edge_ideal(const SimpleGraph& g);

// Degree-(n-2) squarefree ideal <-> graph correspondence.
SimpleGraph graph_from_ideal(const MonomialIdeal& J);
MonomialIdeal ideal_from_graph(const SimpleGraph& g);
MonomialIdeal ideal_from_graph(const SimpleGraph& g, RingPtr ring);

struct GraphStructure {
  bool is_forest = false;
  bool is_connected = false;
  int cyclomatic_number = 0;
  bool odd_unicyclic = false;
  int unique_cycle_length = 0;  // 0 unless cyclomatic_number == 1
};

GraphStructure structure(const SimpleGraph& g);

// Spanning-tree-first edge order where every edge meets an earlier one;
// certifies shellability of the 1-dimensional complex.
std::vector<Edge> shelling_edge_order(const SimpleGraph& g);

}  // namespace coveralg

#endif
