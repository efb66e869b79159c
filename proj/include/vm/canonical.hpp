#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// Isomorphism machinery is brute force with pruning; keep it to desk scale.
inline constexpr int kDefaultCanonicalLimit = 12;

struct CanonicalLabelling {
    std::string form;        // graph6 of the canonically relabelled graph
    std::vector<int> order;  // order[pos] = original vertex placed at pos
};

// Canonical form: the lexicographically smallest adjacency bit-string (in
// graph6 column-major bit order) over all vertex permutations compatible
// with iterated degree refinement. Equal byte-strings iff isomorphic; the
// string itself is a valid graph6 encoding of the canonical representative.
std::string canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);

CanonicalLabelling canonical_labelling(const Graph& g, int limit = kDefaultCanonicalLimit);

// Isomorphism h -> g as a vertex map (map[v_h] = v_g), found by backtracking
// on degree-compatible assignments. Works directly on the two graphs, so it
// is usable beyond the canonical-form capacity.
std::optional<std::vector<int>> find_isomorphism(const Graph& h, const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b, int limit = kDefaultCanonicalLimit);

} // namespace vm
