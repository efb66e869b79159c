#include "vm/treemodel.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace vm {

namespace {

// leaf vertex -> path of child indices from the root
void collect_paths(const TmNode& node, std::vector<int>& prefix,
                   std::map<int, std::vector<int>>& paths) {
    if (node.is_leaf()) {
        if (!node.children.empty()) throw DomainError("tree-model leaf with children");
        if (paths.count(node.leaf)) throw DomainError("duplicate tree-model leaf");
        paths[node.leaf] = prefix;
        return;
    }
    if (node.children.empty()) throw DomainError("internal tree-model node with no children");
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        prefix.push_back(static_cast<int>(i));
        collect_paths(node.children[i], prefix, paths);
        prefix.pop_back();
    }
}

int leaf_distance(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t lcp = 0;
    while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
    return static_cast<int>(a.size() - lcp) + static_cast<int>(b.size() - lcp);
}

} // namespace

Graph eval_tree_model(const TreeModel& tm) {
    std::map<int, std::vector<int>> paths;
    std::vector<int> prefix;
    collect_paths(tm.root, prefix, paths);

    const int n = static_cast<int>(paths.size());
    for (const auto& [leaf, path] : paths) {
        if (leaf < 0 || leaf >= n) throw DomainError("tree-model leaves must be exactly 0..n-1");
        if (static_cast<int>(path.size()) != tm.depth)
            throw DomainError("root-to-leaf path of length " + std::to_string(path.size()) +
                              ", expected exactly " + std::to_string(tm.depth));
    }
    if (static_cast<int>(tm.colour.size()) != n)
        throw DomainError("tree-model colouring size mismatch");
    for (int c : tm.colour)
        if (c < 0 || c >= tm.colours) throw DomainError("tree-model colour out of palette");

    // signature lookup; reject asymmetric duplicates
    std::map<std::tuple<int, int, int>, bool> sig;
    for (const auto& e : tm.signature) {
        auto key = std::make_tuple(std::min(e.c1, e.c2), std::max(e.c1, e.c2), e.dist);
        auto [it, inserted] = sig.emplace(key, e.edge);
        if (!inserted && it->second != e.edge)
            throw DomainError("asymmetric tree-model signature at colours (" + std::to_string(e.c1) +
                              "," + std::to_string(e.c2) + "), distance " + std::to_string(e.dist));
    }

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int dist = leaf_distance(paths.at(u), paths.at(v));
            auto key = std::make_tuple(std::min(tm.colour[static_cast<std::size_t>(u)],
                                                tm.colour[static_cast<std::size_t>(v)]),
                                       std::max(tm.colour[static_cast<std::size_t>(u)],
                                                tm.colour[static_cast<std::size_t>(v)]),
                                       dist);
            auto it = sig.find(key);
            if (it != sig.end() && it->second) g.add_edge(u, v);
        }
    return g;
}

namespace {

// Restricted-growth strings enumerate set partitions of 0..n-1.
bool next_partition(std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    for (int i = n - 1; i > 0; --i) {
        int cap = 0;
        for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<std::size_t>(j)]);
        if (rgs[static_cast<std::size_t>(i)] <= cap) {
            ++rgs[static_cast<std::size_t>(i)];
            std::fill(rgs.begin() + i + 1, rgs.end(), 0);
            return true;
        }
    }
    return false;
}

// The required signature is forced entry by entry; detect conflicts.
bool consistent_signature(const Graph& g, const std::vector<int>& colour,
                          const std::vector<int>& block, int d,
                          std::map<std::tuple<int, int, int>, bool>& sig) {
    sig.clear();
    const int n = g.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int dist;
            if (d == 1)
                dist = 2;
            else
                dist = block[static_cast<std::size_t>(u)] == block[static_cast<std::size_t>(v)] ? 2 : 4;
            auto key = std::make_tuple(std::min(colour[static_cast<std::size_t>(u)],
                                                colour[static_cast<std::size_t>(v)]),
                                       std::max(colour[static_cast<std::size_t>(u)],
                                                colour[static_cast<std::size_t>(v)]),
                                       dist);
            bool edge = g.adjacent(u, v);
            auto [it, inserted] = sig.emplace(key, edge);
            if (!inserted && it->second != edge) return false;
        }
    return true;
}

TreeModel assemble(const Graph& g, int d, int m, const std::vector<int>& colour,
                   const std::vector<int>& block,
                   const std::map<std::tuple<int, int, int>, bool>& sig) {
    TreeModel tm;
    tm.depth = d;
    tm.colours = m;
    tm.colour = colour;
    const int n = g.size();
    if (d == 0) {
        tm.root.leaf = 0;
    } else if (d == 1) {
        for (int v = 0; v < n; ++v) tm.root.children.push_back(TmNode{v, {}});
    } else {
        int blocks = 1 + *std::max_element(block.begin(), block.end());
        for (int b = 0; b < blocks; ++b) {
            TmNode inner;
            for (int v = 0; v < n; ++v)
                if (block[static_cast<std::size_t>(v)] == b) inner.children.push_back(TmNode{v, {}});
            tm.root.children.push_back(std::move(inner));
        }
    }
    for (const auto& [key, edge] : sig)
        tm.signature.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), edge});
    return tm;
}

} // namespace

std::optional<TreeModel> find_tree_model(const Graph& g, int d, int m) {
    const int n = g.size();
    if (n < 1) throw DomainError("find_tree_model requires a non-empty graph");
    if (n > 8 || d > 2 || m > 3 || d < 0 || m < 1)
        throw CapacityError("find_tree_model supports n <= 8, 0 <= d <= 2, 1 <= m <= 3");

    if (d == 0) {
        // the root is the single leaf
        if (n != 1) return std::nullopt;
        TreeModel tm;
        tm.depth = 0;
        tm.colours = m;
        tm.colour = {0};
        tm.root.leaf = 0;
        return tm;
    }

    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    std::map<std::tuple<int, int, int>, bool> sig;

    auto try_colourings = [&](const std::vector<int>& block) -> std::optional<TreeModel> {
        std::fill(colour.begin(), colour.end(), 0);
        for (;;) {
            if (consistent_signature(g, colour, block, d, sig))
                return assemble(g, d, m, colour, block, sig);
            int i = n - 1;
            while (i >= 0 && colour[static_cast<std::size_t>(i)] == m - 1) {
                colour[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) return std::nullopt;
            ++colour[static_cast<std::size_t>(i)];
        }
    };

    if (d == 1) {
        std::vector<int> block(static_cast<std::size_t>(n), 0);
        return try_colourings(block);
    }

    std::vector<int> block(static_cast<std::size_t>(n), 0);
    do {
        if (auto tm = try_colourings(block)) return tm;
    } while (next_partition(block));
    return std::nullopt;
}

} // namespace vm
