#pragma once

#include <string>
#include <vector>

namespace vm {

// Rooted forest over V(G) as a parent map, parent[v] == -1 at roots.
// Witnesses td(G) <= height()+1 when every edge of G joins a vertex to one
// of its forest ancestors.
struct TreeDepthDecomposition {
    std::vector<int> parent;

    int size() const { return static_cast<int>(parent.size()); }

    // Longest root-to-leaf path in edges; -1 for the empty forest.
    int height() const;

    // Depth of v below its root, in edges. Assumes a valid forest.
    int depth_of(int v) const;

    bool is_ancestor(int anc, int v) const;
};

} // namespace vm
