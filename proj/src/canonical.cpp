#include "vm/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "vm/graph6.hpp"

namespace vm {

namespace {

// Iterated neighbour-colour refinement. Colour indices are assigned from
// sorted signatures, so they are themselves isomorphism-invariant.
std::vector<int> refine_colours(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(colour[static_cast<std::size_t>(v)]);
            for (int u : g.neighbours(v)) s.push_back(colour[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
        });
        std::vector<int> next(static_cast<std::size_t>(n), 0);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                             sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])])
                ++c;
            next[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = c;
        }
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

struct MinSearch {
    const Graph& g;
    const std::vector<int>& pos_colour;  // required colour at each position
    std::vector<int> colour;             // vertex -> colour
    std::vector<std::uint64_t> best;     // per-position column bits, UINT64_MAX = not yet fixed
    std::vector<int> best_order;
    std::vector<int> placed;
    std::uint64_t used = 0;

    // u,v interchangeable by an automorphism: N(u)\{v} == N(v)\{u}
    bool twins(int u, int v) const {
        std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
        return (g.row(u) & ~bv) == (g.row(v) & ~bu);
    }

    void dfs(int k) {
        const int n = g.size();
        if (k == n) {
            best_order = placed;
            return;
        }
        std::vector<int> tried;
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1u) continue;
            if (colour[static_cast<std::size_t>(u)] != pos_colour[static_cast<std::size_t>(k)]) continue;
            bool dup = false;
            for (int t : tried)
                if (twins(u, t)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(u);

            // column k bits: adjacency of u to placed[0..k-1], bit (0,k) most significant
            std::uint64_t col = 0;
            for (int i = 0; i < k; ++i)
                col = (col << 1) | (g.adjacent(u, placed[static_cast<std::size_t>(i)]) ? 1u : 0u);

            if (col > best[static_cast<std::size_t>(k)]) continue;
            if (col < best[static_cast<std::size_t>(k)]) {
                best[static_cast<std::size_t>(k)] = col;
                for (int j = k + 1; j < n; ++j) best[static_cast<std::size_t>(j)] = ~std::uint64_t{0};
            }
            placed.push_back(u);
            used |= std::uint64_t{1} << u;
            dfs(k + 1);
            used &= ~(std::uint64_t{1} << u);
            placed.pop_back();
        }
    }
};

} // namespace

CanonicalLabelling canonical_labelling(const Graph& g, int limit) {
    const int n = g.size();
    if (n > limit)
        throw CapacityError("canonical_form supports n <= " + std::to_string(limit) +
                            " (got n = " + std::to_string(n) + ")");
    if (n == 0) return {to_graph6(g), {}};

    const std::vector<int> colour = refine_colours(g);
    std::vector<int> pos_colour(colour);
    std::sort(pos_colour.begin(), pos_colour.end());

    MinSearch search{g, pos_colour, colour, {}, {}, {}, 0};
    search.best.assign(static_cast<std::size_t>(n), ~std::uint64_t{0});
    search.placed.reserve(static_cast<std::size_t>(n));
    search.dfs(0);

    Graph canon(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(search.best_order[static_cast<std::size_t>(i)],
                           search.best_order[static_cast<std::size_t>(j)]))
                canon.add_edge(i, j);
    return {to_graph6(canon), std::move(search.best_order)};
}

std::string canonical_form(const Graph& g, int limit) { return canonical_labelling(g, limit).form; }

bool is_isomorphic(const Graph& a, const Graph& b, int limit) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

namespace {

bool embed(const Graph& h, const Graph& g, const std::vector<int>& order, std::vector<int>& map,
           std::uint64_t& used, int k) {
    if (k == h.size()) return true;
    int v = order[static_cast<std::size_t>(k)];
    for (int w = 0; w < g.size(); ++w) {
        if ((used >> w) & 1u) continue;
        if (h.degree(v) != g.degree(w)) continue;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int u = order[static_cast<std::size_t>(i)];
            ok = h.adjacent(v, u) == g.adjacent(w, map[static_cast<std::size_t>(u)]);
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used |= std::uint64_t{1} << w;
        if (embed(h, g, order, map, used, k + 1)) return true;
        used &= ~(std::uint64_t{1} << w);
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& h, const Graph& g) {
    if (h.size() != g.size() || h.edge_count() != g.edge_count()) return std::nullopt;
    {
        std::vector<int> dh, dg;
        for (int v = 0; v < h.size(); ++v) dh.push_back(h.degree(v));
        for (int v = 0; v < g.size(); ++v) dg.push_back(g.degree(v));
        std::sort(dh.begin(), dh.end());
        std::sort(dg.begin(), dg.end());
        if (dh != dg) return std::nullopt;
    }
    // assign high-degree vertices first, connected-first would be overkill here
    std::vector<int> order(static_cast<std::size_t>(h.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
    });
    std::vector<int> map(static_cast<std::size_t>(h.size()), -1);
    std::uint64_t used = 0;
    if (embed(h, g, order, map, used, 0)) return map;
    return std::nullopt;
}

} // namespace vm
