#pragma once

#include <random>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// All graphs on exactly n vertices up to isomorphism (canonical
// representatives, sorted by canonical form). Built by augmenting the
// (n-1)-corpus with one vertex; counts for n = 1..7 are
// 1, 2, 4, 11, 34, 156, 1044. Practical up to n = 8.
std::vector<Graph> all_graphs(int n);

// As above, restricted to connected graphs (1, 1, 2, 6, 21, 112, 853).
std::vector<Graph> all_connected_graphs(int n);

// G(n, 1/2) with the given generator.
Graph random_graph(int n, std::mt19937& rng);

} // namespace vm
