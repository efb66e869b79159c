#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vm/certificate.hpp"
#include "vm/graph.hpp"
#include "vm/scdepth.hpp"
#include "vm/script.hpp"
#include "vm/treedepth_types.hpp"

namespace vm {

// Host graph U with a tree-depth decomposition T, together with a script
// that rewrites U into the target G using only vertices of V(U) \ V(G).
// The target occupies ids 0..n-1 of U; apex vertices come after and carry
// reserved labels ("r@<path>", "rx@<path>", "ry@<path>") so locality is
// visible in the host itself.
struct HostWitness {
    Graph host;
    TreeDepthDecomposition forest;
    Script script;
    Graph target;
    int td_bound = 0;

    MinorCertificate to_certificate() const;
};

// Build the vertex-minor host for an SC decomposition of depth k: one apex
// per internal node, adjacent to that node's complement set; script is a
// bottom-up LC at each apex followed by the apex deletions. td(U) <= k+1.
HostWitness sc_to_vertex_minor_host(const ScDecomposition& d);

// Pivot-minor host for a BSC decomposition of depth k: an apex edge rx-ry
// per internal node with rx joined to X and ry to Y; script pivots each apex
// edge bottom-up, then deletes the apexes. td(U) <= 2k+1.
HostWitness bsc_to_pivot_minor_host(const BscDecomposition& d);

// Edge inside X avoiding u, guaranteed to exist when A(G)[X] is non-singular
// and |X| >= 3; returns the lexicographically smallest such pair.
std::pair<int, int> find_pivotable_pair(const Graph& g, VertexSet x, int u);

// Sequence of edge pivots realising the set pivot A(G)*X, pairs partitioning
// X with s in the last pair.
struct PivotPairing {
    std::vector<std::pair<int, int>> pairs;
    int special = -1;  // s
};

// Recursively peel edges off X (always avoiding s) and pivot them eagerly;
// postconditions -- composed pivots reproduce A(G)*X exactly, pairs
// partition X, s lies in the last pair -- are asserted before returning.
PivotPairing decompose_set_pivot(const Graph& g, VertexSet x, int s);

// Expand every BSC complement pair into three stacked SC complements
// (X, then Y, then X union Y); depth at most triples, evaluation unchanged.
ScDecomposition sc_from_bsc(const BscDecomposition& d);

// Replace every SC complement set X by the pair (X n A, X n B) for a
// bipartition (A, B) of the evaluated graph; depth is preserved and the
// result evaluates to the same graph (checked).
BscDecomposition bsc_from_sc_bipartite(const ScDecomposition& d,
                                       std::pair<VertexSet, VertexSet> bipartition);

// The 2n-vertex threshold cograph H_n: vertices a_1..a_n (ids 0..n-1) and
// b_1..b_n (ids n..2n-1), edges {b_i b_j : i < j} and {b_i a_j : i <= j}.
Graph make_hn(int n);

// Pivot-minor certificate extracting the induced path a_1, b_1, ..., b_n
// (n edges) from H_n: pivot a_i b_i for i = 2..n-1, delete a_2..a_n.
MinorCertificate hn_path_certificate(int n);

// Sweep all connected graphs with <= n_max vertices and tree-depth <= d,
// compute the largest clique pivot-minor of each, and check the 3^(d-1)
// ceiling. An explicit corpus replaces the built-in enumeration when given.
struct CliqueBoundReport {
    int d = 0;
    int n_max = 0;
    int bound = 0;      // 3^(d-1)
    int max_found = 0;  // K(d, n_max)
    int graphs_checked = 0;
    int witness_count = 0;  // hosts achieving max_found
    struct Witness {
        Graph host;
        int t = 0;
        MinorCertificate certificate;
    };
    std::vector<Witness> witnesses;  // at most kept_witness_cap of them
    static constexpr int kept_witness_cap = 10;
};

CliqueBoundReport clique_bound_experiment(int d, int n_max,
                                          const std::vector<Graph>* corpus = nullptr,
                                          int threads = 1);

} // namespace vm
