#pragma once

#include <optional>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// Rooted tree with every root-to-leaf path of the same length; leaves are
// the vertices of the modelled graph.
struct TmNode {
    int leaf = -1;
    std::vector<TmNode> children;

    bool is_leaf() const { return leaf >= 0; }
};

struct TmSignatureEntry {
    int c1 = 0, c2 = 0, dist = 0;
    bool edge = false;
};

// Tree-model with m colours and depth d: adjacency of two vertices depends
// only on their colours and their distance in the tree. Signature entries
// absent for a (colour, colour, distance) triple mean "no edge".
struct TreeModel {
    TmNode root;
    int depth = 0;
    int colours = 0;                       // palette size m
    std::vector<int> colour;               // per vertex id
    std::vector<TmSignatureEntry> signature;
};

// Graph defined by the model. Throws on malformed trees (non-uniform depth,
// bad leaves) and on asymmetric signatures.
Graph eval_tree_model(const TreeModel& tm);

// Exhaustive membership search for TM(d, m): uniform-depth tree shapes are
// enumerated as leaf-set partitions, colourings exhaustively; the signature
// is forced by the graph and checked for consistency. Definitive within the
// bounds n <= 8, d <= 2, m <= 3.
std::optional<TreeModel> find_tree_model(const Graph& g, int d, int m);

} // namespace vm
