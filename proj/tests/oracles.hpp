#pragma once

// Test-only oracles. Each one takes the dumbest defensible route so it stays
// independent of the library code path it cross-checks.

#include <set>
#include <string>
#include <vector>

#include "vm/canonical.hpp"
#include "vm/graph.hpp"

namespace vm::oracle {

// Tree-depth straight from the definition: try every parent map on V(G),
// keep the acyclic ones whose closure contains G, minimise height+1.
// n <= 5 keeps (n+1)^n candidates tame.
inline int brute_force_tree_depth(const Graph& g) {
    const int n = g.size();
    if (n == 0) return 0;
    int best = n;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    auto ancestor = [&](int anc, int v) {
        for (int u = parent[static_cast<std::size_t>(v)]; u >= 0;
             u = parent[static_cast<std::size_t>(u)])
            if (u == anc) return true;
        return false;
    };
    std::vector<int> choice(static_cast<std::size_t>(n), -1);  // -1 root, else parent
    for (;;) {
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = choice[static_cast<std::size_t>(v)];
        bool acyclic = true;
        for (int v = 0; v < n && acyclic; ++v) {
            int steps = 0;
            for (int u = v; u >= 0; u = parent[static_cast<std::size_t>(u)])
                if (++steps > n + 1) {
                    acyclic = false;
                    break;
                }
        }
        if (acyclic) {
            bool valid_parents = true;
            for (int v = 0; v < n; ++v)
                if (choice[static_cast<std::size_t>(v)] == v) valid_parents = false;
            bool closed = valid_parents;
            if (closed)
                for (auto [u, v] : g.edges())
                    if (!ancestor(u, v) && !ancestor(v, u)) {
                        closed = false;
                        break;
                    }
            if (closed) {
                int height = 0;
                for (int v = 0; v < n; ++v) {
                    int d = 0;
                    for (int u = parent[static_cast<std::size_t>(v)]; u >= 0;
                         u = parent[static_cast<std::size_t>(u)])
                        ++d;
                    height = std::max(height, d);
                }
                best = std::min(best, height + 1);
            }
        }
        int i = 0;
        while (i < n && choice[static_cast<std::size_t>(i)] == n - 1) {
            choice[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == n) break;
        ++choice[static_cast<std::size_t>(i)];
    }
    return best;
}

// Canonical forms of every graph reachable from g by edge pivots and vertex
// deletions, saturated by breadth-first closure (finite up to isomorphism,
// so no depth bound is needed). Ground truth for pivot-minor decisions.
inline std::set<std::string> pivot_reachable_forms(const Graph& g) {
    std::set<std::string> seen{canonical_form(g)};
    std::vector<Graph> queue{g};
    while (!queue.empty()) {
        Graph cur = queue.back();
        queue.pop_back();
        std::vector<Graph> next;
        for (auto [u, v] : cur.edges()) next.push_back(pivot_edge(cur, u, v));
        if (cur.size() > 1)
            for (int v = 0; v < cur.size(); ++v)
                next.push_back(induced_subgraph(cur, cur.vertices() - VertexSet::single(v)));
        for (Graph& h : next)
            if (seen.insert(canonical_form(h)).second) queue.push_back(h);
    }
    return seen;
}

// Same closure for local complementations and deletions: the vertex-minor
// ground truth.
inline std::set<std::string> vertex_minor_reachable_forms(const Graph& g) {
    std::set<std::string> seen{canonical_form(g)};
    std::vector<Graph> queue{g};
    while (!queue.empty()) {
        Graph cur = queue.back();
        queue.pop_back();
        std::vector<Graph> next;
        for (int v = 0; v < cur.size(); ++v) next.push_back(local_complement(cur, v));
        if (cur.size() > 1)
            for (int v = 0; v < cur.size(); ++v)
                next.push_back(induced_subgraph(cur, cur.vertices() - VertexSet::single(v)));
        for (Graph& h : next)
            if (seen.insert(canonical_form(h)).second) queue.push_back(h);
    }
    return seen;
}

// Every labelled graph on n vertices, all 2^(n(n-1)/2) of them.
inline std::vector<Graph> all_labelled_graphs(int n) {
    const int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << bits);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace vm::oracle
