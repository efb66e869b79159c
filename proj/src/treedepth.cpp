#include "vm/treedepth.hpp"

#include <algorithm>

#include "vm/canonical.hpp"

namespace vm {

int TreeDepthDecomposition::height() const {
    int h = -1;
    for (int v = 0; v < size(); ++v) h = std::max(h, depth_of(v));
    return h;
}

int TreeDepthDecomposition::depth_of(int v) const {
    int d = 0;
    for (int u = parent[static_cast<std::size_t>(v)]; u >= 0; u = parent[static_cast<std::size_t>(u)])
        ++d;
    return d;
}

bool TreeDepthDecomposition::is_ancestor(int anc, int v) const {
    for (int u = parent[static_cast<std::size_t>(v)]; u >= 0; u = parent[static_cast<std::size_t>(u)])
        if (u == anc) return true;
    return false;
}

VerifyTdResult verify_td(const Graph& g, const TreeDepthDecomposition& forest, int d) {
    const int n = g.size();
    if (forest.size() != n) return {false, "forest is not over V(G)"};

    for (int v = 0; v < n; ++v) {
        int p = forest.parent[static_cast<std::size_t>(v)];
        if (p < -1 || p >= n) return {false, "parent of " + std::to_string(v) + " out of range"};
        if (p == v) return {false, "vertex " + std::to_string(v) + " is its own parent"};
    }
    // acyclicity: every parent walk must reach a root within n steps
    for (int v = 0; v < n; ++v) {
        int u = v;
        for (int steps = 0; u >= 0; ++steps) {
            if (steps > n) return {false, "parent map contains a cycle through " + std::to_string(v)};
            u = forest.parent[static_cast<std::size_t>(u)];
        }
    }
    if (n > 0 && forest.height() > d - 1)
        return {false, "forest height " + std::to_string(forest.height()) + " exceeds " +
                           std::to_string(d - 1)};
    for (auto [u, v] : g.edges())
        if (!forest.is_ancestor(u, v) && !forest.is_ancestor(v, u))
            return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " is not ancestor-descendant"};
    return {};
}

namespace {

constexpr int kTreeDepthLimit = 12;

int td_rec(const Graph& g, std::unordered_map<std::string, int>& memo) {
    const int n = g.size();
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (g.edge_count() == 0) return 1;

    const auto comps = components(g);
    if (comps.size() > 1) {
        int best = 0;
        for (VertexSet comp : comps) best = std::max(best, td_rec(induced_subgraph(g, comp), memo));
        return best;
    }

    const std::string key = canonical_form(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int best = n;  // removing vertices one by one always works
    for (int v = 0; v < n && best > 2; ++v) {
        int sub = td_rec(induced_subgraph(g, g.vertices() - VertexSet::single(v)), memo);
        best = std::min(best, 1 + sub);
    }
    memo.emplace(key, best);
    return best;
}

// Rebuild a witness by re-asking the memoised values; ids maps the dense
// vertices of g back to the original graph.
void build_forest(const Graph& g, const std::vector<int>& ids, int parent_of_roots,
                  std::vector<int>& parent, std::unordered_map<std::string, int>& memo) {
    const int n = g.size();
    if (n == 0) return;
    const auto comps = components(g);
    if (comps.size() > 1) {
        for (VertexSet comp : comps) {
            std::vector<int> sub_ids;
            for (int v : comp) sub_ids.push_back(ids[static_cast<std::size_t>(v)]);
            build_forest(induced_subgraph(g, comp), sub_ids, parent_of_roots, parent, memo);
        }
        return;
    }
    if (n == 1) {
        parent[static_cast<std::size_t>(ids[0])] = parent_of_roots;
        return;
    }
    const int target = td_rec(g, memo);
    for (int v = 0; v < n; ++v) {
        Graph rest = induced_subgraph(g, g.vertices() - VertexSet::single(v));
        if (1 + td_rec(rest, memo) == target) {
            parent[static_cast<std::size_t>(ids[static_cast<std::size_t>(v)])] = parent_of_roots;
            std::vector<int> sub_ids;
            for (int u = 0; u < n; ++u)
                if (u != v) sub_ids.push_back(ids[static_cast<std::size_t>(u)]);
            build_forest(rest, sub_ids, ids[static_cast<std::size_t>(v)], parent, memo);
            return;
        }
    }
    throw InternalError("tree-depth witness reconstruction found no optimal root");
}

} // namespace

int TreeDepthSolver::value(const Graph& g) {
    if (g.size() > kTreeDepthLimit)
        throw CapacityError("tree_depth supports n <= " + std::to_string(kTreeDepthLimit));
    return td_rec(g, memo_);
}

TreeDepthResult TreeDepthSolver::solve(const Graph& g) {
    TreeDepthResult result;
    result.value = value(g);
    result.witness.parent.assign(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> ids(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    build_forest(g, ids, -1, result.witness.parent, memo_);
    if (auto check = verify_td(g, result.witness, result.value); !check)
        throw InternalError("tree-depth witness failed self-check: " + check.reason);
    return result;
}

TreeDepthResult tree_depth(const Graph& g) {
    TreeDepthSolver solver;
    return solver.solve(g);
}

} // namespace vm
