#include "vm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "vm/canonical.hpp"
#include "vm/graph6.hpp"

namespace vm {

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> cache;  // n -> representatives, insert-only

std::vector<Graph> build_level(const std::vector<Graph>& prev, int n) {
    std::set<std::string> forms;
    for (const Graph& g : prev) {
        const std::uint64_t hoods = std::uint64_t{1} << (n - 1);
        for (std::uint64_t mask = 0; mask < hoods; ++mask) {
            Graph h(n);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            for (int u : VertexSet(mask)) h.add_edge(u, n - 1);
            forms.insert(canonical_form(h));
        }
    }
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const std::string& f : forms) out.push_back(from_graph6(f));
    return out;
}

} // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1) throw DomainError("all_graphs requires n >= 1");
    if (n > 8) throw CapacityError("all_graphs supports n <= 8");
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Graph> level{Graph(1)};
    cache.emplace(1, level);
    for (int k = 2; k <= n; ++k) {
        if (auto it = cache.find(k); it != cache.end()) {
            level = it->second;
            continue;
        }
        level = build_level(level, k);
        cache.emplace(k, level);
    }
    return level;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace vm
