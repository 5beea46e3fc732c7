#ifndef COVERALG_ENUMERATE_HPP
#define COVERALG_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "coveralg/graph.hpp"

namespace coveralg {

// Edge bitmask in the fixed pair order (1,2),(1,3),...,(1,n),(2,3),...
uint32_t edge_mask(const SimpleGraph& g);
SimpleGraph graph_from_mask(int n, uint32_t mask);

// Lexicographically least edge mask over all vertex relabelings (n <= 8).
uint32_t canonical_mask(int n, uint32_t mask);

// All labeled trees on n vertices via Pruefer sequences.
std::vector<SimpleGraph> labeled_trees(int n);

// One representative per isomorphism class (n <= 8).
std::vector<SimpleGraph> trees_up_to_iso(int n);

// All connected graphs on n vertices up to isomorphism, by vertex
// augmentation from smaller representative sets (n <= 8).
std::vector<SimpleGraph> connected_graphs_up_to_iso(int n);

// All connected labeled graphs on n vertices (exhaustive; n small).
std::vector<SimpleGraph> connected_labeled_graphs(int n);

std::vector<SimpleGraph> random_connected_graphs(int n, int count, uint64_t seed);

// true iff g contains a cycle of the exact given length
bool has_cycle_of_length(const SimpleGraph& g, int len);

// smallest even cycle length, 0 if none
int shortest_even_cycle(const SimpleGraph& g);

}  // namespace coveralg

#endif
