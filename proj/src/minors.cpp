#include "vm/minors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "vm/canonical.hpp"
#include "vm/constructions.hpp"
#include "vm/gf2.hpp"

namespace vm {

std::size_t node_limit_from_env() {
    if (const char* s = std::getenv("VM_NODE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultNodeLimit;
}

OrbitResult local_equivalence_orbit(const Graph& g, std::size_t node_limit) {
    if (g.size() > 12) throw CapacityError("local_equivalence_orbit supports n <= 12");

    OrbitResult result;
    struct State {
        Graph graph;
        Script script;
    };
    std::deque<State> queue;
    result.members.emplace(canonical_form(g), Script{});
    queue.push_back({g, Script{}});

    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < state.graph.size(); ++v) {
            if (state.graph.degree(v) < 2) continue;  // LC is the identity there
            Graph next = local_complement(state.graph, v);
            std::string form = canonical_form(next);
            if (result.members.count(form)) continue;
            if (result.members.size() >= node_limit) {
                result.truncated = true;
                return result;
            }
            Script script = state.script;
            script.steps.push_back(Step::lc(v));
            result.members.emplace(form, script);
            queue.push_back({std::move(next), std::move(script)});
        }
    }
    return result;
}

namespace {

struct SearchState {
    Graph graph;
    std::vector<int> host_ids;
    Script script;
};

MinorCertificate certificate_from_state(const Graph& host, const Graph& target,
                                        const SearchState& state) {
    auto iso = find_isomorphism(target, state.graph);
    if (!iso) throw InternalError("goal state not isomorphic to target after all");
    MinorCertificate cert;
    cert.kind = MinorKind::VertexMinor;
    cert.host = host;
    cert.target = target;
    cert.script = state.script;
    cert.mapping.resize(static_cast<std::size_t>(target.size()));
    for (int t = 0; t < target.size(); ++t)
        cert.mapping[static_cast<std::size_t>(t)] =
            state.host_ids[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(t)])];
    if (auto check = verify_certificate(cert); !check)
        throw InternalError("vertex-minor certificate failed self-check: " + check.reason);
    return cert;
}

// BFS over (local complementation | deletion) states, deduplicated by
// canonical form. visit(state) is called once per distinct form, smaller
// scripts first; return true to stop.
template <typename Visit>
bool search_vertex_minor_states(const Graph& g, int min_order, std::size_t node_limit,
                                Visit&& visit) {
    std::deque<SearchState> queue;
    std::unordered_set<std::string> seen;

    SearchState start{g, {}, {}};
    start.host_ids.resize(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < start.host_ids.size(); ++i)
        start.host_ids[i] = static_cast<int>(i);
    seen.insert(canonical_form(g));
    if (visit(start)) return true;
    queue.push_back(std::move(start));

    while (!queue.empty()) {
        SearchState state = std::move(queue.front());
        queue.pop_front();
        const int n = state.graph.size();

        auto consider = [&](SearchState&& next) -> bool {
            std::string form = canonical_form(next.graph);
            if (seen.count(form)) return false;
            if (seen.size() >= node_limit)
                throw CapacityError("vertex-minor search exceeded the node limit (" +
                                    std::to_string(node_limit) + " states)");
            seen.insert(std::move(form));
            if (visit(next)) return true;
            queue.push_back(std::move(next));
            return false;
        };

        for (int v = 0; v < n; ++v) {
            if (state.graph.degree(v) < 2) continue;
            SearchState next;
            next.graph = local_complement(state.graph, v);
            next.host_ids = state.host_ids;
            next.script = state.script;
            next.script.steps.push_back(Step::lc(state.host_ids[static_cast<std::size_t>(v)]));
            if (consider(std::move(next))) return true;
        }
        if (n > min_order) {
            for (int v = 0; v < n; ++v) {
                SearchState next;
                next.graph =
                    induced_subgraph(state.graph, state.graph.vertices() - VertexSet::single(v));
                next.host_ids = state.host_ids;
                next.host_ids.erase(next.host_ids.begin() + v);
                next.script = state.script;
                next.script.steps.push_back(Step::del(state.host_ids[static_cast<std::size_t>(v)]));
                if (consider(std::move(next))) return true;
            }
        }
    }
    return false;
}

} // namespace

std::optional<MinorCertificate> is_vertex_minor(const Graph& g, const Graph& h,
                                                std::size_t node_limit) {
    if (g.size() > 10) throw CapacityError("is_vertex_minor supports |V(G)| <= 10");
    if (h.size() > g.size()) return std::nullopt;
    if (h.size() == 0) throw DomainError("target graph must be non-empty");

    const std::string target_form = canonical_form(h);
    std::optional<MinorCertificate> found;
    search_vertex_minor_states(g, h.size(), node_limit, [&](const SearchState& state) {
        if (state.graph.size() != h.size()) return false;
        if (canonical_form(state.graph) != target_form) return false;
        found = certificate_from_state(g, h, state);
        return true;
    });
    return found;
}

std::optional<MinorCertificate> is_pivot_minor(const Graph& g, const Graph& h) {
    if (g.size() > 10) throw CapacityError("is_pivot_minor supports |V(G)| <= 10");
    if (h.size() > g.size()) return std::nullopt;
    if (h.size() == 0) throw DomainError("target graph must be non-empty");

    const int n = g.size();
    const Gf2Matrix a = adjacency_matrix(g);

    // subsets ascending by cardinality, then by bitmask value
    std::vector<std::uint64_t> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) subsets.push_back(x);
    std::stable_sort(subsets.begin(), subsets.end(), [](std::uint64_t p, std::uint64_t q) {
        return std::popcount(p) < std::popcount(q);
    });

    std::vector<int> target_degrees;
    for (int v = 0; v < h.size(); ++v) target_degrees.push_back(h.degree(v));
    std::sort(target_degrees.begin(), target_degrees.end());

    for (std::uint64_t xbits : subsets) {
        VertexSet x(xbits);
        if (x.count() % 2 != 0) continue;  // odd principal submatrices are singular
        if (!is_nonsingular(a, x)) continue;
        const Gf2Matrix pivoted = principal_pivot(a, x);

        for (std::uint64_t ybits = 0; ybits < (std::uint64_t{1} << n); ++ybits) {
            VertexSet y(ybits);
            if (y.count() != h.size()) continue;
            Graph candidate = graph_from_matrix(principal_submatrix(pivoted, y));
            if (candidate.edge_count() != h.edge_count()) continue;
            {
                std::vector<int> deg;
                for (int v = 0; v < candidate.size(); ++v) deg.push_back(candidate.degree(v));
                std::sort(deg.begin(), deg.end());
                if (deg != target_degrees) continue;
            }
            auto iso = find_isomorphism(h, candidate);
            if (!iso) continue;

            MinorCertificate cert;
            cert.kind = MinorKind::PivotMinor;
            cert.host = g;
            cert.target = h;
            cert.matrix_witness = MatrixWitness{x, y};
            if (!x.empty()) {
                PivotPairing pairing = decompose_set_pivot(g, x, x.min());
                for (auto [u, v] : pairing.pairs) cert.script.steps.push_back(Step::pivot(u, v));
            }
            for (int v : g.vertices() - y) cert.script.steps.push_back(Step::del(v));

            const auto ys = y.to_vector();
            cert.mapping.resize(static_cast<std::size_t>(h.size()));
            for (int t = 0; t < h.size(); ++t)
                cert.mapping[static_cast<std::size_t>(t)] =
                    ys[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(t)])];
            if (auto check = verify_certificate(cert); !check)
                throw InternalError("pivot-minor certificate failed self-check: " + check.reason);
            return cert;
        }
    }
    return std::nullopt;
}

std::pair<int, MinorCertificate> max_clique_pivot_minor(const Graph& g) {
    if (g.size() > 9) throw CapacityError("max_clique_pivot_minor supports n <= 9");
    if (g.size() == 0) throw DomainError("graph must be non-empty");
    for (int t = g.size(); t >= 1; --t)
        if (auto cert = is_pivot_minor(g, complete_graph(t))) return {t, std::move(*cert)};
    throw InternalError("K_1 must always be a pivot-minor");
}

int max_path_vertex_minor(const Graph& g, int t_max, std::size_t node_limit) {
    if (g.size() > 10) throw CapacityError("max_path_vertex_minor supports n <= 10");
    if (g.size() == 0) throw DomainError("graph must be non-empty");
    t_max = std::min(t_max, g.size() - 1);

    // canonical forms of the candidate paths, longest first
    std::unordered_map<std::string, int> path_form;
    for (int len = 0; len <= t_max; ++len) path_form[canonical_form(path_graph(len + 1))] = len;

    int best = -1;
    search_vertex_minor_states(g, 1, node_limit, [&](const SearchState& state) {
        auto it = path_form.find(canonical_form(state.graph));
        if (it != path_form.end()) best = std::max(best, it->second);
        return best == t_max;
    });
    return best;
}

} // namespace vm
