#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// Recursive witness for SC(k) membership: a leaf is a single vertex; an
// internal node forms the disjoint union of its children and then
// complements the edges on X. Leaves carry the vertex ids of the evaluated
// graph, which must be exactly 0..n-1.
struct ScNode {
    int leaf = -1;
    std::vector<ScNode> children;
    VertexSet x;

    bool is_leaf() const { return leaf >= 0; }
    int depth() const;
};

struct ScDecomposition {
    ScNode root;
    int depth() const { return root.depth(); }
};

// BSC variant: internal nodes complement the edges between disjoint X and Y.
struct BscNode {
    int leaf = -1;
    std::vector<BscNode> children;
    VertexSet x, y;

    bool is_leaf() const { return leaf >= 0; }
    int depth() const;
};

struct BscDecomposition {
    BscNode root;
    int depth() const { return root.depth(); }
};

Graph eval_sc(const ScDecomposition& d);
Graph eval_bsc(const BscDecomposition& d);

// Exact SC-depth / BSC-depth with witnesses, by exhaustive search over
// complement sets, memoised on canonical form (membership in SC(k) is
// monotone in k, so each form stores its known true/false frontier).
// Capacity n <= 8. Solvers keep their memo; reuse one instance for sweeps.
class ScDepthSolver {
public:
    int depth(const Graph& g);
    std::pair<int, ScDecomposition> solve(const Graph& g);

private:
    struct Entry {
        int min_true = 1 << 20;
        int max_false = -1;
    };
    bool in_sc(const Graph& g, int k);
    ScNode build(const Graph& g, const std::vector<int>& ids, int k);
    std::unordered_map<std::string, Entry> memo_;
};

class BscDepthSolver {
public:
    int depth(const Graph& g);
    std::pair<int, BscDecomposition> solve(const Graph& g);

private:
    struct Entry {
        int min_true = 1 << 20;
        int max_false = -1;
    };
    bool in_bsc(const Graph& g, int k);
    BscNode build(const Graph& g, const std::vector<int>& ids, int k);
    std::unordered_map<std::string, Entry> memo_;
};

std::pair<int, ScDecomposition> sc_depth(const Graph& g);
std::pair<int, BscDecomposition> bsc_depth(const Graph& g);

} // namespace vm
