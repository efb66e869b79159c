#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vm/errors.hpp"
#include "vm/vertex_set.hpp"

namespace vm {

// Hard cap on the dense representation: one 64-bit row per vertex.
inline constexpr int kMaxVertices = 64;

// Simple undirected graph on vertex ids 0..n-1. Adjacency is a symmetric
// bit matrix with zero diagonal, one packed row per vertex, so local
// complementation and set complements are row-masked XORs.
//
// Optional per-vertex text labels carry identity through constructions
// (e.g. "a3", "rx@0.1"); they take no part in adjacency or equality.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityError("graph size " + std::to_string(n) + " out of range 0.." +
                                std::to_string(kMaxVertices));
        n_ = n;
        rows_.assign(static_cast<std::size_t>(n), 0);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int size() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void toggle_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] ^= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] ^= std::uint64_t{1} << u;
    }

    VertexSet neighbours(int v) const {
        check_vertex(v);
        return VertexSet(rows_[static_cast<std::size_t>(v)]);
    }

    std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return neighbours(v).count(); }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t r : rows_) twice += std::popcount(r);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VertexSet(rows_[static_cast<std::size_t>(u)] >> u << u))
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }

    // Empty when the graph is unlabelled, otherwise one string per vertex.
    const std::vector<std::string>& labels() const { return labels_; }

    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw DomainError("label count does not match vertex count");
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j]) throw DomainError("duplicate vertex label: " + labels[i]);
        labels_ = std::move(labels);
    }

    void clear_labels() { labels_.clear(); }

    std::optional<int> vertex_by_label(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        return std::nullopt;
    }

    // Structural equality: same order and same adjacency, labels ignored.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw DomainError("vertex id " + std::to_string(v) + " out of range 0.." +
                              std::to_string(n_ - 1));
    }

    void check_subset(VertexSet s) const {
        if (!s.subset_of(vertices())) throw DomainError("vertex set is not a subset of V(G)");
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::string> labels_;
};

// ---- local rewriting operations (all pure) -------------------------------

// G*v: complement adjacency between every pair of neighbours of v.
Graph local_complement(const Graph& g, int v);

// G ^ uv = G*u*v*u, defined only when uv is an edge.
Graph pivot_edge(const Graph& g, int u, int v);

// Complement the edges inside X.
Graph complement_on(const Graph& g, VertexSet x);

// Complement the edges between disjoint X and Y.
Graph complement_between(const Graph& g, VertexSet x, VertexSet y);

// Induced subgraph on S, re-indexed densely in ascending original-id order.
// Labels, when present, follow their vertices.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Block-diagonal union; part i occupies ids [offset(i), offset(i)+|part i|)
// with offsets cumulative in input order. Labels are kept only when the
// union stays duplicate-free.
Graph disjoint_union(const std::vector<Graph>& parts);

// ---- basic structure queries ---------------------------------------------

bool is_connected(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Bipartition (A,B) with A,B independent, or nullopt. Within each component
// the side containing the smallest vertex goes to A.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

// Exact chromatic number by branch and bound; n <= 16.
int chromatic_number(const Graph& g);

// ---- small factories -------------------------------------------------------

Graph edgeless_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);  // n vertices, edges i -- i+1
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);  // part A = 0..a-1, part B = a..a+b-1
Graph star_graph(int leaves);            // centre 0

} // namespace vm
