#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "vm/certificate.hpp"
#include "vm/graph.hpp"
#include "vm/script.hpp"

namespace vm {

// Ceiling on distinct canonical forms a search may visit before it gives up
// with a CapacityError; overridable per call and via VM_NODE_LIMIT.
inline constexpr std::size_t kDefaultNodeLimit = 100000;

std::size_t node_limit_from_env();

// Local-equivalence orbit of g up to isomorphism: every canonical form
// reachable by local complementations, each with one representative script
// (replaying it on g yields a graph with that canonical form).
struct OrbitResult {
    std::map<std::string, Script> members;  // canonical form (a graph6 string) -> script
    bool truncated = false;
};

OrbitResult local_equivalence_orbit(const Graph& g, std::size_t node_limit = kDefaultNodeLimit);

// Decide whether h is a vertex-minor of g, with a replayable certificate.
// Breadth-first search over states reachable by local complementations and
// deletions, deduplicated by canonical form; exhaustive, so nullopt is a
// definitive "no". Requires |V(g)| <= 10; hitting the node limit raises
// CapacityError rather than answering.
std::optional<MinorCertificate> is_vertex_minor(const Graph& g, const Graph& h,
                                                std::size_t node_limit = kDefaultNodeLimit);

// Decide whether h is a pivot-minor of g via the matrix characterisation:
// enumerate X with A(g)[X] non-singular (ascending |X|, even sizes only;
// odd principal submatrices of adjacency matrices are always singular),
// then Y, and test (A(g)*X)[Y] against h. Certificates carry the (X, Y)
// witness plus an equivalent edge-pivot script. Requires |V(g)| <= 10.
std::optional<MinorCertificate> is_pivot_minor(const Graph& g, const Graph& h);

// Largest t with K_t a pivot-minor of g, with witness; n <= 9.
std::pair<int, MinorCertificate> max_clique_pivot_minor(const Graph& g);

// Largest path length (in edges) <= t_max realisable as a vertex-minor of g;
// single sweep over the vertex-minor state space. n <= 10.
int max_path_vertex_minor(const Graph& g, int t_max,
                          std::size_t node_limit = kDefaultNodeLimit);

} // namespace vm
