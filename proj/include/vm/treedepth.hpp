#pragma once

#include <string>
#include <unordered_map>

#include "vm/graph.hpp"
#include "vm/treedepth_types.hpp"

namespace vm {

struct TreeDepthResult {
    int value = 0;
    TreeDepthDecomposition witness;
};

struct VerifyTdResult {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// True iff forest is a rooted forest on V(G) of height <= d-1 whose closure
// contains every edge of G.
VerifyTdResult verify_td(const Graph& g, const TreeDepthDecomposition& forest, int d);

// Exact tree-depth with a witnessing decomposition. Recursion: maximum over
// components when disconnected, otherwise 1 + min over root choices of
// td(G - v); values memoised on canonical form. n <= 12.
//
// The solver keeps its memo across calls; reuse one instance for sweeps.
class TreeDepthSolver {
public:
    int value(const Graph& g);
    TreeDepthResult solve(const Graph& g);

private:
    std::unordered_map<std::string, int> memo_;
};

// One-shot convenience wrapper.
TreeDepthResult tree_depth(const Graph& g);

} // namespace vm
