#include "vm/scdepth.hpp"

#include <algorithm>

#include "vm/canonical.hpp"

namespace vm {

namespace {

constexpr int kScLimit = 8;

template <typename Node>
int node_depth(const Node& node) {
    if (node.is_leaf()) return 0;
    int best = 0;
    for (const auto& child : node.children) best = std::max(best, node_depth(child));
    return 1 + best;
}

template <typename Node>
VertexSet collect_leaves(const Node& node) {
    if (node.is_leaf()) {
        if (node.leaf >= kMaxVertices) throw DomainError("leaf id out of range");
        return VertexSet::single(node.leaf);
    }
    if (node.children.empty()) throw DomainError("internal decomposition node with no children");
    VertexSet leaves;
    for (const auto& child : node.children) {
        VertexSet sub = collect_leaves(child);
        if (sub.intersects(leaves)) throw DomainError("duplicate leaf in decomposition");
        leaves = leaves | sub;
    }
    return leaves;
}

} // namespace

int ScNode::depth() const { return node_depth(*this); }
int BscNode::depth() const { return node_depth(*this); }

namespace {

VertexSet eval_sc_node(const ScNode& node, Graph& acc) {
    if (node.is_leaf()) return VertexSet::single(node.leaf);
    VertexSet leaves;
    for (const ScNode& child : node.children) leaves = leaves | eval_sc_node(child, acc);
    if (!node.x.subset_of(leaves))
        throw DomainError("SC node complements vertices outside its leaves");
    auto xs = node.x.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) acc.toggle_edge(xs[i], xs[j]);
    return leaves;
}

VertexSet eval_bsc_node(const BscNode& node, Graph& acc) {
    if (node.is_leaf()) return VertexSet::single(node.leaf);
    VertexSet leaves;
    for (const BscNode& child : node.children) leaves = leaves | eval_bsc_node(child, acc);
    if (node.x.intersects(node.y)) throw DomainError("BSC node has overlapping X and Y");
    if (!node.x.subset_of(leaves) || !node.y.subset_of(leaves))
        throw DomainError("BSC node complements vertices outside its leaves");
    for (int u : node.x)
        for (int v : node.y) acc.toggle_edge(u, v);
    return leaves;
}

template <typename Decomposition>
int checked_order(const Decomposition& d) {
    VertexSet leaves = collect_leaves(d.root);
    const int n = leaves.count();
    if (!(leaves == VertexSet::full(n)))
        throw DomainError("decomposition leaves must be exactly 0..n-1");
    return n;
}

} // namespace

Graph eval_sc(const ScDecomposition& d) {
    Graph acc(checked_order(d));
    eval_sc_node(d.root, acc);
    return acc;
}

Graph eval_bsc(const BscDecomposition& d) {
    Graph acc(checked_order(d));
    eval_bsc_node(d.root, acc);
    return acc;
}

// ---- SC solver -------------------------------------------------------------

bool ScDepthSolver::in_sc(const Graph& g, int k) {
    const int n = g.size();
    if (n == 1) return true;
    if (k <= 0) return false;

    const std::string key = canonical_form(g);
    auto& entry = memo_[key];
    if (k >= entry.min_true) return true;
    if (k <= entry.max_false) return false;

    bool found = false;
    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t x = 0; x <= all && !found; ++x) {
        const Graph h = complement_on(g, VertexSet(x));
        bool ok = true;
        for (VertexSet comp : components(h)) {
            if (comp.count() == 1) continue;
            if (!in_sc(induced_subgraph(h, comp), k - 1)) {
                ok = false;
                break;
            }
        }
        found = ok;
    }
    auto& fresh = memo_[key];  // recursion may rehash
    if (found)
        fresh.min_true = std::min(fresh.min_true, k);
    else
        fresh.max_false = std::max(fresh.max_false, k);
    return found;
}

int ScDepthSolver::depth(const Graph& g) {
    if (g.size() < 1) throw DomainError("sc_depth requires a non-empty graph");
    if (g.size() > kScLimit) throw CapacityError("sc_depth supports n <= " + std::to_string(kScLimit));
    for (int k = 0; k <= g.size(); ++k)
        if (in_sc(g, k)) return k;
    throw InternalError("SC-depth exceeded its n-1 bound");
}

ScNode ScDepthSolver::build(const Graph& g, const std::vector<int>& ids, int k) {
    if (g.size() == 1) return ScNode{ids[0], {}, VertexSet{}};

    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t x = 0; x <= all; ++x) {
        const Graph h = complement_on(g, VertexSet(x));
        const auto comps = components(h);
        bool ok = true;
        for (VertexSet comp : comps)
            if (comp.count() > 1 && !in_sc(induced_subgraph(h, comp), k - 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;

        ScNode node;
        for (VertexSet comp : comps) {
            std::vector<int> sub_ids;
            for (int v : comp) sub_ids.push_back(ids[static_cast<std::size_t>(v)]);
            node.children.push_back(build(induced_subgraph(h, comp), sub_ids, k - 1));
        }
        for (int v : VertexSet(x)) node.x.add(ids[static_cast<std::size_t>(v)]);
        return node;
    }
    throw InternalError("SC witness build found no complement set at budget " + std::to_string(k));
}

std::pair<int, ScDecomposition> ScDepthSolver::solve(const Graph& g) {
    const int k = depth(g);
    std::vector<int> ids(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    ScDecomposition witness{build(g, ids, k)};
    if (!(eval_sc(witness) == g)) throw InternalError("SC witness does not evaluate back to G");
    if (witness.depth() != k) throw InternalError("SC witness depth mismatch");
    return {k, std::move(witness)};
}

// ---- BSC solver ------------------------------------------------------------

namespace {

// Invoke fn(x, y) for (0,0) and for every pair of disjoint non-empty subsets
// of `all`, x ascending then y ascending; stop early when fn returns true.
template <typename Fn>
bool for_each_bsc_pair(std::uint64_t all, Fn&& fn) {
    if (fn(std::uint64_t{0}, std::uint64_t{0})) return true;
    for (std::uint64_t x = 1; x <= all; ++x) {
        if ((x & all) != x) continue;
        const std::uint64_t rest = all & ~x;
        for (std::uint64_t y = (0 - rest) & rest; y != 0; y = (y - rest) & rest) {
            if (fn(x, y)) return true;
            if (y == rest) break;
        }
    }
    return false;
}

} // namespace

bool BscDepthSolver::in_bsc(const Graph& g, int k) {
    const int n = g.size();
    if (n == 1) return true;
    if (k <= 0) return false;

    const std::string key = canonical_form(g);
    auto& entry = memo_[key];
    if (k >= entry.min_true) return true;
    if (k <= entry.max_false) return false;

    const bool found = for_each_bsc_pair(g.vertices().bits(), [&](std::uint64_t x, std::uint64_t y) {
        const Graph h = complement_between(g, VertexSet(x), VertexSet(y));
        for (VertexSet comp : components(h)) {
            if (comp.count() == 1) continue;
            if (!in_bsc(induced_subgraph(h, comp), k - 1)) return false;
        }
        return true;
    });
    auto& fresh = memo_[key];
    if (found)
        fresh.min_true = std::min(fresh.min_true, k);
    else
        fresh.max_false = std::max(fresh.max_false, k);
    return found;
}

int BscDepthSolver::depth(const Graph& g) {
    if (g.size() < 1) throw DomainError("bsc_depth requires a non-empty graph");
    if (g.size() > kScLimit)
        throw CapacityError("bsc_depth supports n <= " + std::to_string(kScLimit));
    for (int k = 0; k <= g.size(); ++k)
        if (in_bsc(g, k)) return k;
    throw InternalError("BSC-depth exceeded its n-1 bound");
}

BscNode BscDepthSolver::build(const Graph& g, const std::vector<int>& ids, int k) {
    if (g.size() == 1) return BscNode{ids[0], {}, VertexSet{}, VertexSet{}};

    BscNode node;
    bool done = for_each_bsc_pair(g.vertices().bits(), [&](std::uint64_t x, std::uint64_t y) {
        const Graph h = complement_between(g, VertexSet(x), VertexSet(y));
        const auto comps = components(h);
        for (VertexSet comp : comps)
            if (comp.count() > 1 && !in_bsc(induced_subgraph(h, comp), k - 1)) return false;

        for (VertexSet comp : comps) {
            std::vector<int> sub_ids;
            for (int v : comp) sub_ids.push_back(ids[static_cast<std::size_t>(v)]);
            node.children.push_back(build(induced_subgraph(h, comp), sub_ids, k - 1));
        }
        for (int v : VertexSet(x)) node.x.add(ids[static_cast<std::size_t>(v)]);
        for (int v : VertexSet(y)) node.y.add(ids[static_cast<std::size_t>(v)]);
        return true;
    });
    if (!done)
        throw InternalError("BSC witness build found no complement pair at budget " +
                            std::to_string(k));
    return node;
}

std::pair<int, BscDecomposition> BscDepthSolver::solve(const Graph& g) {
    const int k = depth(g);
    std::vector<int> ids(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    BscDecomposition witness{build(g, ids, k)};
    if (!(eval_bsc(witness) == g)) throw InternalError("BSC witness does not evaluate back to G");
    if (witness.depth() != k) throw InternalError("BSC witness depth mismatch");
    return {k, std::move(witness)};
}

std::pair<int, ScDecomposition> sc_depth(const Graph& g) {
    ScDepthSolver solver;
    return solver.solve(g);
}

std::pair<int, BscDecomposition> bsc_depth(const Graph& g) {
    BscDepthSolver solver;
    return solver.solve(g);
}

} // namespace vm
