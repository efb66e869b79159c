#include "vm/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "vm/enumerate.hpp"
#include "vm/gf2.hpp"
#include "vm/minors.hpp"
#include "vm/treedepth.hpp"

namespace vm {

MinorCertificate HostWitness::to_certificate() const {
    MinorCertificate cert;
    cert.kind = MinorKind::VertexMinor;
    for (const Step& s : script.steps)
        if (s.kind == Step::Kind::Pivot) cert.kind = MinorKind::PivotMinor;
    cert.host = host;
    cert.target = target;
    cert.script = script;
    cert.mapping.resize(static_cast<std::size_t>(target.size()));
    std::iota(cert.mapping.begin(), cert.mapping.end(), 0);
    cert.host_forest = forest;
    cert.td_bound = td_bound;
    if (cert.kind == MinorKind::PivotMinor) {
        VertexSet x;
        for (const Step& s : cert.script.steps)
            if (s.kind == Step::Kind::Pivot) {
                x.add(s.u);
                x.add(s.v);
            }
        cert.matrix_witness = MatrixWitness{x, VertexSet::full(target.size())};
    }
    return cert;
}

namespace {

struct HostBuild {
    Graph target;
    int next_apex;
    std::vector<std::pair<int, int>> edges;      // host edges
    std::vector<int> parent;                     // forest parent by host id
    std::vector<Step> rewrites;                  // bottom-up LC / PIVOT steps
    std::vector<std::pair<int, std::string>> apex_labels;

    int new_apex(const std::string& label) {
        int id = next_apex++;
        parent.push_back(-1);
        apex_labels.emplace_back(id, label);
        return id;
    }
};

std::string child_path(const std::string& path, std::size_t i) {
    return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

// Returns the forest root of the subtree built for `node`.
int build_sc_host(const ScNode& node, const std::string& path, HostBuild& hb) {
    if (node.is_leaf()) return node.leaf;
    std::vector<int> child_roots;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        child_roots.push_back(build_sc_host(node.children[i], child_path(path, i), hb));
    int apex = hb.new_apex("r@" + path);
    for (int r : child_roots) hb.parent[static_cast<std::size_t>(r)] = apex;
    for (int v : node.x) hb.edges.emplace_back(apex, v);
    hb.rewrites.push_back(Step::lc(apex));
    return apex;
}

int build_bsc_host(const BscNode& node, const std::string& path, HostBuild& hb) {
    if (node.is_leaf()) return node.leaf;
    std::vector<int> child_roots;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        child_roots.push_back(build_bsc_host(node.children[i], child_path(path, i), hb));
    int rx = hb.new_apex("rx@" + path);
    int ry = hb.new_apex("ry@" + path);
    hb.parent[static_cast<std::size_t>(ry)] = rx;
    for (int r : child_roots) hb.parent[static_cast<std::size_t>(r)] = ry;
    hb.edges.emplace_back(rx, ry);
    for (int v : node.x) hb.edges.emplace_back(rx, v);
    for (int v : node.y) hb.edges.emplace_back(ry, v);
    hb.rewrites.push_back(Step::pivot(rx, ry));
    return rx;
}

HostWitness finish_host(HostBuild&& hb, int td_bound) {
    const int n = hb.target.size();
    HostWitness w;
    w.target = hb.target;
    w.td_bound = td_bound;

    w.host = Graph(hb.next_apex);
    for (auto [u, v] : hb.edges) w.host.add_edge(u, v);
    {
        std::vector<std::string> labels(static_cast<std::size_t>(hb.next_apex));
        bool target_labelled = hb.target.has_labels();
        for (int v = 0; v < n; ++v)
            labels[static_cast<std::size_t>(v)] =
                target_labelled ? hb.target.labels()[static_cast<std::size_t>(v)]
                                : "v" + std::to_string(v);
        for (auto& [id, label] : hb.apex_labels) labels[static_cast<std::size_t>(id)] = label;
        w.host.set_labels(std::move(labels));
    }

    w.forest.parent = hb.parent;
    w.script.steps = hb.rewrites;
    for (int apex = n; apex < hb.next_apex; ++apex) w.script.steps.push_back(Step::del(apex));

    // every witness self-verifies before leaving the constructor
    if (auto check = verify_td(w.host, w.forest, w.td_bound); !check)
        throw InternalError("host forest failed verify_td: " + check.reason);
    for (const Step& s : w.script.steps) {
        bool apex_only = s.kind == Step::Kind::Pivot ? (s.u >= n && s.v >= n) : (s.u >= n);
        if (!apex_only) throw InternalError("host script rewrites inside V(G)");
    }
    ReplayResult replayed = apply_script(w.host, w.script);
    std::vector<int> expect(static_cast<std::size_t>(n));
    std::iota(expect.begin(), expect.end(), 0);
    if (replayed.host_ids != expect || !(replayed.graph == w.target))
        throw InternalError("host script does not replay to the target graph");
    return w;
}

} // namespace

HostWitness sc_to_vertex_minor_host(const ScDecomposition& d) {
    Graph target = eval_sc(d);
    HostBuild hb{target, target.size(), {}, {}, {}, {}};
    hb.parent.assign(static_cast<std::size_t>(target.size()), -1);
    build_sc_host(d.root, "", hb);
    return finish_host(std::move(hb), d.depth() + 1);
}

HostWitness bsc_to_pivot_minor_host(const BscDecomposition& d) {
    Graph target = eval_bsc(d);
    HostBuild hb{target, target.size(), {}, {}, {}, {}};
    hb.parent.assign(static_cast<std::size_t>(target.size()), -1);
    build_bsc_host(d.root, "", hb);
    return finish_host(std::move(hb), 2 * d.depth() + 1);
}

std::pair<int, int> find_pivotable_pair(const Graph& g, VertexSet x, int u) {
    g.check_subset(x);
    if (!x.contains(u)) throw DomainError("find_pivotable_pair: u must lie in X");
    if (x.count() < 3) throw DomainError("find_pivotable_pair requires |X| >= 3");
    if (!is_nonsingular(adjacency_matrix(g), x))
        throw DomainError("find_pivotable_pair requires non-singular A(G)[X]");
    const auto xs = (x - VertexSet::single(u)).to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (g.adjacent(xs[i], xs[j])) return {xs[i], xs[j]};
    throw InternalError("non-singular A(G)[X] without an edge in X avoiding u");
}

PivotPairing decompose_set_pivot(const Graph& g, VertexSet x, int s) {
    g.check_subset(x);
    if (x.empty()) throw DomainError("decompose_set_pivot requires X to be non-empty");
    if (!x.contains(s)) throw DomainError("decompose_set_pivot: s must lie in X");
    const Gf2Matrix a = adjacency_matrix(g);
    if (!is_nonsingular(a, x)) throw DomainError("decompose_set_pivot requires non-singular A(G)[X]");
    if (x.count() % 2 != 0)
        throw DomainError("odd |X| cannot have non-singular A(G)[X]; rejected up front");

    PivotPairing pairing;
    pairing.special = s;

    Graph cur = g;
    VertexSet rest = x;
    while (rest.count() > 2) {
        auto [v, w] = find_pivotable_pair(cur, rest, s);
        pairing.pairs.emplace_back(v, w);
        cur = pivot_edge(cur, v, w);
        rest = rest - VertexSet::of({v, w});
    }
    {
        const auto last = rest.to_vector();
        if (!cur.adjacent(last[0], last[1]))
            throw InternalError("final pair of the set-pivot decomposition is not an edge");
        pairing.pairs.emplace_back(last[0], last[1]);
        cur = pivot_edge(cur, last[0], last[1]);
    }

    // postconditions of the decomposition
    if (!(adjacency_matrix(cur) == principal_pivot(a, x)))
        throw InternalError("composed edge pivots do not reproduce A(G)*X");
    VertexSet covered;
    for (auto [v, w] : pairing.pairs) {
        if (covered.contains(v) || covered.contains(w))
            throw InternalError("set-pivot pairs are not disjoint");
        covered.add(v);
        covered.add(w);
    }
    if (!(covered == x)) throw InternalError("set-pivot pairs do not partition X");
    auto [lv, lw] = pairing.pairs.back();
    if (lv != s && lw != s) throw InternalError("s is not in the last set-pivot pair");
    return pairing;
}

namespace {

ScNode sc_from_bsc_node(const BscNode& node) {
    if (node.is_leaf()) return ScNode{node.leaf, {}, VertexSet{}};
    ScNode inner;
    for (const BscNode& child : node.children) inner.children.push_back(sc_from_bsc_node(child));
    inner.x = node.x;
    ScNode mid;
    mid.children.push_back(std::move(inner));
    mid.x = node.y;
    ScNode outer;
    outer.children.push_back(std::move(mid));
    outer.x = node.x | node.y;
    return outer;
}

BscNode bsc_from_sc_node(const ScNode& node, VertexSet a, VertexSet b) {
    if (node.is_leaf()) return BscNode{node.leaf, {}, VertexSet{}, VertexSet{}};
    BscNode out;
    for (const ScNode& child : node.children) out.children.push_back(bsc_from_sc_node(child, a, b));
    out.x = node.x & a;
    out.y = node.x & b;
    return out;
}

} // namespace

ScDecomposition sc_from_bsc(const BscDecomposition& d) {
    ScDecomposition out{sc_from_bsc_node(d.root)};
    if (!(eval_sc(out) == eval_bsc(d)))
        throw InternalError("sc_from_bsc changed the evaluated graph");
    if (out.depth() > 3 * d.depth()) throw InternalError("sc_from_bsc exceeded triple depth");
    return out;
}

BscDecomposition bsc_from_sc_bipartite(const ScDecomposition& d,
                                       std::pair<VertexSet, VertexSet> bip) {
    const Graph g = eval_sc(d);
    const auto [a, b] = bip;
    if (a.intersects(b) || !((a | b) == g.vertices()))
        throw DomainError("bipartition must split V(G) into two disjoint sets");
    for (auto [u, v] : g.edges())
        if ((a.contains(u) && a.contains(v)) || (b.contains(u) && b.contains(v)))
            throw DomainError("given sets are not independent: graph is not bipartite that way");

    BscDecomposition out{bsc_from_sc_node(d.root, a, b)};
    if (!(eval_bsc(out) == g))
        throw InternalError("bipartite SC-to-BSC replacement changed the evaluated graph");
    if (out.depth() > d.depth()) throw InternalError("bsc_from_sc_bipartite increased the depth");
    return out;
}

Graph make_hn(int n) {
    if (n < 1) throw DomainError("make_hn requires n >= 1");
    if (2 * n > kMaxVertices) throw CapacityError("H_n needs 2n <= " + std::to_string(kMaxVertices));
    Graph g(2 * n);
    // a_i has id i-1, b_i has id n+i-1
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(n + i - 1, n + j - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) g.add_edge(n + i - 1, j - 1);
    std::vector<std::string> labels(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        labels[static_cast<std::size_t>(i - 1)] = "a" + std::to_string(i);
        labels[static_cast<std::size_t>(n + i - 1)] = "b" + std::to_string(i);
    }
    g.set_labels(std::move(labels));
    return g;
}

MinorCertificate hn_path_certificate(int n) {
    if (n < 2) throw DomainError("hn_path_certificate requires n >= 2");
    const Graph host = make_hn(n);
    const auto a_id = [](int i) { return i - 1; };
    const auto b_id = [n](int i) { return n + i - 1; };

    MinorCertificate cert;
    cert.kind = MinorKind::PivotMinor;
    cert.host = host;

    // Pivoting a_i b_i exchanges the adjacencies of the pair (that is what
    // A(G)*{u,v} does), so of each pivoted pair the a-vertex survives and the
    // induced path runs a_1, b_1, a_2, a_3, ..., a_{n-1}, b_n.
    VertexSet x;
    for (int i = 2; i <= n - 1; ++i) {
        cert.script.steps.push_back(Step::pivot(a_id(i), b_id(i)));
        x.add(a_id(i));
        x.add(b_id(i));
    }
    std::vector<int> survivors{a_id(1), b_id(1)};
    for (int i = 2; i <= n - 1; ++i) survivors.push_back(a_id(i));
    survivors.push_back(b_id(n));
    VertexSet y = VertexSet::of(survivors);
    for (int v : host.vertices() - y) cert.script.steps.push_back(Step::del(v));

    // target: a path whose vertices carry the host labels of the survivors
    Graph path = path_graph(n + 1);
    std::vector<std::string> labels;
    for (int v : survivors) labels.push_back(host.labels()[static_cast<std::size_t>(v)]);
    path.set_labels(std::move(labels));
    cert.target = path;

    cert.mapping = survivors;
    cert.matrix_witness = MatrixWitness{x, y};

    // the mapping *is* the path order, so verification pins the exact edges
    if (auto check = verify_certificate(cert); !check)
        throw InternalError("H_n path certificate failed self-check: " + check.reason);
    return cert;
}

CliqueBoundReport clique_bound_experiment(int d, int n_max, const std::vector<Graph>* corpus,
                                          int threads) {
    if (d < 1 || d > 3 || n_max < 1 || n_max > 7)
        throw CapacityError("clique_bound_experiment supports 1 <= d <= 3, n_max <= 7");
    if (threads < 1) throw DomainError("threads must be >= 1");

    CliqueBoundReport report;
    report.d = d;
    report.n_max = n_max;
    report.bound = 1;
    for (int i = 1; i < d; ++i) report.bound *= 3;

    std::vector<Graph> hosts;
    if (corpus) {
        for (const Graph& g : *corpus)
            if (g.size() >= 1 && g.size() <= n_max && is_connected(g)) hosts.push_back(g);
    } else {
        for (int n = 1; n <= n_max; ++n)
            for (Graph& g : all_connected_graphs(n)) hosts.push_back(std::move(g));
    }

    TreeDepthSolver td_solver;
    std::vector<Graph> eligible;
    for (const Graph& g : hosts)
        if (td_solver.value(g) <= d) eligible.push_back(g);
    report.graphs_checked = static_cast<int>(eligible.size());

    std::vector<std::pair<int, MinorCertificate>> results(eligible.size());
    auto work = [&](int worker) {
        for (std::size_t i = static_cast<std::size_t>(worker); i < eligible.size();
             i += static_cast<std::size_t>(threads))
            results[i] = max_clique_pivot_minor(eligible[i]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    // associative merge in enumeration order keeps the report schedule-independent
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        auto& [t, cert] = results[i];
        if (t > report.max_found) {
            report.max_found = t;
            report.witnesses.clear();
            report.witness_count = 0;
        }
        if (t == report.max_found) {
            ++report.witness_count;
            if (static_cast<int>(report.witnesses.size()) < CliqueBoundReport::kept_witness_cap)
                report.witnesses.push_back({eligible[i], t, cert});
        }
    }
    if (report.max_found > report.bound)
        throw InternalError("clique bound 3^(d-1) violated: found K_" +
                            std::to_string(report.max_found));
    return report;
}

} // namespace vm
