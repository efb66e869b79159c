#include "vm/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace vm {

Graph local_complement(const Graph& g, int v) {
    g.check_vertex(v);
    Graph out = g;
    const auto nb = g.neighbours(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) out.toggle_edge(nb[i], nb[j]);
    return out;
}

Graph pivot_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v))
        throw DomainError("pivot requires an edge: " + std::to_string(u) + "-" + std::to_string(v) +
                          " is not in E(G)");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph complement_on(const Graph& g, VertexSet x) {
    g.check_subset(x);
    Graph out = g;
    auto xs = x.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out.toggle_edge(xs[i], xs[j]);
    return out;
}

Graph complement_between(const Graph& g, VertexSet x, VertexSet y) {
    g.check_subset(x);
    g.check_subset(y);
    if (x.intersects(y)) throw DomainError("complement_between requires disjoint sets");
    Graph out = g;
    for (int u : x)
        for (int v : y) out.toggle_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    g.check_subset(s);
    const auto keep = s.to_vector();
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int v : keep) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        out.set_labels(std::move(labels));
    }
    return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw DomainError("disjoint_union of zero parts");
    int total = 0;
    bool labelled = true;
    for (const Graph& p : parts) {
        total += p.size();
        labelled = labelled && p.has_labels();
    }
    Graph out(total);
    std::vector<std::string> labels;
    int offset = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) out.add_edge(offset + u, offset + v);
        if (labelled)
            for (const auto& l : p.labels()) labels.push_back(l);
        offset += p.size();
    }
    if (labelled) {
        bool distinct = true;
        for (std::size_t i = 0; i < labels.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) out.set_labels(std::move(labels));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t unseen = g.vertices().bits();
    while (unseen != 0) {
        std::uint64_t comp = unseen & (~unseen + 1);  // lowest unseen vertex
        for (;;) {
            std::uint64_t grown = comp;
            for (int v : VertexSet(comp)) grown |= g.row(v);
            grown &= g.vertices().bits();
            if (grown == comp) break;
            comp = grown;
        }
        out.emplace_back(comp);
        unseen &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    VertexSet a, b;
    for (VertexSet comp : components(g)) {
        std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
        std::vector<int> queue{comp.min()};
        side[static_cast<std::size_t>(comp.min())] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbours(u)) {
                if (side[static_cast<std::size_t>(v)] < 0) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
        for (int v : comp) (side[static_cast<std::size_t>(v)] == 0 ? a : b).add(v);
    }
    return std::make_pair(a, b);
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

// Backtracking k-colourability; a vertex may open at most one colour beyond
// those already in use, which kills colour-permutation symmetry.
bool colour_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& colour, int pos,
                int used, int k) {
    if (pos == static_cast<int>(order.size())) return true;
    int v = order[static_cast<std::size_t>(pos)];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (int u : g.neighbours(v))
            if (colour[static_cast<std::size_t>(u)] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colour[static_cast<std::size_t>(v)] = c;
        if (colour_rec(g, order, colour, pos + 1, std::max(used, c + 1), k)) return true;
        colour[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

bool colourable(const Graph& g, const std::vector<int>& order, int k) {
    std::vector<int> colour(static_cast<std::size_t>(g.size()), -1);
    return colour_rec(g, order, colour, 0, 0, k);
}

} // namespace

int chromatic_number(const Graph& g) {
    const int n = g.size();
    if (n > 16) throw CapacityError("chromatic_number supports n <= 16");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    // greedy upper bound, then close the gap from below
    int upper = 0;
    {
        std::vector<int> colour(static_cast<std::size_t>(n), -1);
        for (int v : order) {
            std::uint64_t taken = 0;
            for (int u : g.neighbours(v))
                if (colour[static_cast<std::size_t>(u)] >= 0)
                    taken |= std::uint64_t{1} << colour[static_cast<std::size_t>(u)];
            int c = std::countr_one(taken);
            colour[static_cast<std::size_t>(v)] = c;
            upper = std::max(upper, c + 1);
        }
    }
    for (int k = 2; k < upper; ++k)
        if (colourable(g, order, k)) return k;
    return upper;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

} // namespace vm
