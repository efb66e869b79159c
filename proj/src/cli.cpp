#include "vm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "vm/canonical.hpp"
#include "vm/constructions.hpp"
#include "vm/enumerate.hpp"
#include "vm/gf2.hpp"
#include "vm/graph6.hpp"
#include "vm/minors.hpp"
#include "vm/serialize.hpp"
#include "vm/treedepth.hpp"
#include "vm/treemodel.hpp"

namespace vm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct GraphInput {
    std::string inline_g6;
    std::string file;

    void attach(CLI::App* cmd, bool required = true) {
        auto* grp = cmd->add_option_group("input", "graph input");
        grp->add_option("-g,--graph", inline_g6, "graph as an inline graph6 string");
        grp->add_option("-f,--file", file, "file with one graph6 per line ('-' = stdin)");
        grp->require_option(required ? 1 : 0, 1);
    }

    std::vector<Graph> load() const {
        if (!inline_g6.empty()) return {from_graph6(inline_g6)};
        if (file == "-") return read_graph6_stream(std::cin);
        std::ifstream in(file);
        if (!in) throw DomainError("cannot open input file: " + file);
        return read_graph6_stream(in);
    }
};

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

Json read_json_input(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file: " + path);
    return Json::parse(in);
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"vertex-minor / pivot-minor graph algebra toolkit"};
    app.set_help_all_flag("--help-all", "print help for every subcommand");
    app.require_subcommand(1);

    // ---- lc ----------------------------------------------------------------
    auto* lc_cmd = app.add_subcommand("lc", "local complementation G*v; prints graph6");
    GraphInput lc_in;
    lc_in.attach(lc_cmd);
    int lc_vertex = 0;
    lc_cmd->add_option("-v,--vertex", lc_vertex, "vertex to complement at")->required();

    // ---- pivot ---------------------------------------------------------------
    auto* pivot_cmd = app.add_subcommand("pivot", "edge pivot G^uv; prints graph6");
    GraphInput pivot_in;
    pivot_in.attach(pivot_cmd);
    int pivot_u = 0, pivot_v = 0;
    pivot_cmd->add_option("-u", pivot_u, "first endpoint")->required();
    pivot_cmd->add_option("-v", pivot_v, "second endpoint")->required();

    // ---- orbit ---------------------------------------------------------------
    auto* orbit_cmd =
        app.add_subcommand("orbit", "local-equivalence orbit up to isomorphism (exploratory)");
    GraphInput orbit_in;
    orbit_in.attach(orbit_cmd);
    std::size_t orbit_limit = node_limit_from_env();
    orbit_cmd->add_option("--node-limit", orbit_limit,
                          "stop after this many canonical forms (env VM_NODE_LIMIT)");

    // ---- vertex-minor / pivot-minor -------------------------------------------
    auto* vmin_cmd =
        app.add_subcommand("vertex-minor", "decide vertex-minor containment, emit certificate");
    GraphInput vmin_in;
    vmin_in.attach(vmin_cmd);
    std::string vmin_target;
    vmin_cmd->add_option("-t,--target", vmin_target, "target graph6")->required();
    std::size_t vmin_limit = node_limit_from_env();
    vmin_cmd->add_option("--node-limit", vmin_limit, "search state ceiling");

    auto* pmin_cmd =
        app.add_subcommand("pivot-minor", "decide pivot-minor containment, emit certificate");
    GraphInput pmin_in;
    pmin_in.attach(pmin_cmd);
    std::string pmin_target;
    pmin_cmd->add_option("-t,--target", pmin_target, "target graph6")->required();

    // ---- depth solvers ---------------------------------------------------------
    auto* td_cmd = app.add_subcommand("tree-depth", "exact tree-depth with witness forest");
    GraphInput td_in;
    td_in.attach(td_cmd);

    auto* sc_cmd = app.add_subcommand("sc-depth", "exact SC-depth with witness decomposition");
    GraphInput sc_in;
    sc_in.attach(sc_cmd);

    auto* bsc_cmd = app.add_subcommand("bsc-depth", "exact BSC-depth with witness decomposition");
    GraphInput bsc_in;
    bsc_in.attach(bsc_cmd);

    auto* tm_cmd = app.add_subcommand("tree-model", "search a tree-model of given depth/colours");
    GraphInput tm_in;
    tm_in.attach(tm_cmd);
    int tm_depth = 1, tm_colours = 1;
    tm_cmd->add_option("-d,--depth", tm_depth, "tree depth d (0..2)")->required();
    tm_cmd->add_option("-m,--colors", tm_colours, "palette size m (1..3)")->required();

    // ---- constructions -----------------------------------------------------------
    auto* schost_cmd = app.add_subcommand(
        "sc-to-host", "build the vertex-minor host of tree-depth <= k+1 from an SC decomposition");
    GraphInput schost_in;
    schost_in.attach(schost_cmd, /*required=*/false);
    std::string schost_decomp;
    schost_cmd->add_option("--decomposition", schost_decomp,
                           "SC decomposition JSON file ('-' = stdin) instead of --graph");

    auto* bschost_cmd = app.add_subcommand(
        "bsc-to-host", "build the pivot-minor host of tree-depth <= 2k+1 from a BSC decomposition");
    GraphInput bschost_in;
    bschost_in.attach(bschost_cmd, /*required=*/false);
    std::string bschost_decomp;
    bschost_cmd->add_option("--decomposition", bschost_decomp,
                            "BSC decomposition JSON file ('-' = stdin) instead of --graph");

    auto* pdec_cmd = app.add_subcommand(
        "pivot-decompose", "decompose a set pivot A(G)*X into a sequence of edge pivots");
    GraphInput pdec_in;
    pdec_in.attach(pdec_cmd);
    std::string pdec_set;
    pdec_cmd->add_option("-X,--set", pdec_set, "comma-separated vertex ids of X")->required();
    int pdec_s = -1;
    pdec_cmd->add_option("-s", pdec_s, "distinguished vertex (default: min of X)");

    auto* hn_cmd = app.add_subcommand("hn", "emit the threshold cograph H_n with labels");
    int hn_n = 1;
    hn_cmd->add_option("-n", hn_n, "index n >= 1")->required();

    auto* hnpath_cmd =
        app.add_subcommand("hn-path", "pivot-minor certificate of the length-n path inside H_n");
    int hnpath_n = 2;
    hnpath_cmd->add_option("-n", hnpath_n, "index n >= 2")->required();

    auto* cb_cmd = app.add_subcommand(
        "clique-bound", "max clique pivot-minors over connected graphs of bounded tree-depth");
    int cb_d = 2, cb_nmax = 6, cb_threads = 1;
    cb_cmd->add_option("-d", cb_d, "tree-depth bound (1..3)")->required();
    cb_cmd->add_option("--n-max", cb_nmax, "largest host order (<= 7)");
    cb_cmd->add_option("--threads", cb_threads, "worker count for the sweep (default 1)");
    std::string cb_corpus;
    cb_cmd->add_option("--corpus", cb_corpus, "optional graph6 file replacing the enumeration");

    // ---- verify / selftest ----------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "verify a certificate JSON file");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file, "certificate path ('-' = stdin)")->required();

    app.add_subcommand("selftest", "run the built-in property suite");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (lc_cmd->parsed()) {
            for (const Graph& g : lc_in.load()) out << to_graph6(local_complement(g, lc_vertex)) << "\n";
            return kExitOk;
        }
        if (pivot_cmd->parsed()) {
            for (const Graph& g : pivot_in.load())
                out << to_graph6(pivot_edge(g, pivot_u, pivot_v)) << "\n";
            return kExitOk;
        }
        if (orbit_cmd->parsed()) {
            for (const Graph& g : orbit_in.load()) {
                OrbitResult orbit = local_equivalence_orbit(g, orbit_limit);
                err << "orbit of " << to_graph6(g) << ": " << orbit.members.size() << " forms"
                    << (orbit.truncated ? " (truncated)" : " (complete)") << "\n";
                out << orbit_to_json(orbit).dump() << "\n";
            }
            return kExitOk;
        }
        if (vmin_cmd->parsed()) {
            Graph host = vmin_in.load().at(0);
            Graph target = from_graph6(vmin_target);
            auto cert = is_vertex_minor(host, target, vmin_limit);
            if (!cert) {
                err << "not a vertex-minor\n";
                return kExitNegative;
            }
            err << "vertex-minor certificate with " << cert->script.steps.size() << " steps\n";
            out << certificate_to_json(*cert).dump() << "\n";
            return kExitOk;
        }
        if (pmin_cmd->parsed()) {
            Graph host = pmin_in.load().at(0);
            Graph target = from_graph6(pmin_target);
            auto cert = is_pivot_minor(host, target);
            if (!cert) {
                err << "not a pivot-minor\n";
                return kExitNegative;
            }
            err << "pivot-minor certificate, |X| = " << cert->matrix_witness->x.count() << "\n";
            out << certificate_to_json(*cert).dump() << "\n";
            return kExitOk;
        }
        if (td_cmd->parsed()) {
            TreeDepthSolver solver;
            for (const Graph& g : td_in.load()) {
                TreeDepthResult r = solver.solve(g);
                err << "td = " << r.value << "\n";
                Json j{{"td", r.value}, {"witness", treedepth_to_json(r.witness)}};
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (sc_cmd->parsed()) {
            ScDepthSolver solver;
            for (const Graph& g : sc_in.load()) {
                auto [k, witness] = solver.solve(g);
                err << "sc-depth = " << k << "\n";
                Json j{{"sc_depth", k}, {"witness", sc_to_json(witness)}};
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (bsc_cmd->parsed()) {
            BscDepthSolver solver;
            for (const Graph& g : bsc_in.load()) {
                auto [k, witness] = solver.solve(g);
                err << "bsc-depth = " << k << "\n";
                Json j{{"bsc_depth", k}, {"witness", bsc_to_json(witness)}};
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (tm_cmd->parsed()) {
            bool all_found = true;
            for (const Graph& g : tm_in.load()) {
                auto model = find_tree_model(g, tm_depth, tm_colours);
                if (model) {
                    err << "tree-model found in TM(" << tm_depth << "," << tm_colours << ")\n";
                    Json j{{"found", true}, {"model", tree_model_to_json(*model)}};
                    out << j.dump() << "\n";
                } else {
                    err << "no tree-model in TM(" << tm_depth << "," << tm_colours << ")\n";
                    out << Json{{"found", false}}.dump() << "\n";
                    all_found = false;
                }
            }
            return all_found ? kExitOk : kExitNegative;
        }
        if (schost_cmd->parsed()) {
            std::vector<std::pair<ScDecomposition, int>> inputs;  // decomposition, depth
            if (!schost_decomp.empty()) {
                ScDecomposition d = sc_from_json(read_json_input(schost_decomp));
                inputs.emplace_back(d, d.depth());
            } else {
                ScDepthSolver solver;
                for (const Graph& g : schost_in.load()) {
                    auto [k, witness] = solver.solve(g);
                    inputs.emplace_back(std::move(witness), k);
                }
            }
            for (auto& [d, k] : inputs) {
                HostWitness w = sc_to_vertex_minor_host(d);
                err << "host on " << w.host.size() << " vertices, td <= " << w.td_bound
                    << " (SC-depth " << k << ")\n";
                Json j = certificate_to_json(w.to_certificate());
                j["decomposition"] = sc_to_json(d);
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (bschost_cmd->parsed()) {
            std::vector<std::pair<BscDecomposition, int>> inputs;
            if (!bschost_decomp.empty()) {
                BscDecomposition d = bsc_from_json(read_json_input(bschost_decomp));
                inputs.emplace_back(d, d.depth());
            } else {
                BscDepthSolver solver;
                for (const Graph& g : bschost_in.load()) {
                    auto [k, witness] = solver.solve(g);
                    inputs.emplace_back(std::move(witness), k);
                }
            }
            for (auto& [d, k] : inputs) {
                HostWitness w = bsc_to_pivot_minor_host(d);
                err << "host on " << w.host.size() << " vertices, td <= " << w.td_bound
                    << " (BSC-depth " << k << ")\n";
                Json j = certificate_to_json(w.to_certificate());
                j["decomposition"] = bsc_to_json(d);
                out << j.dump() << "\n";
            }
            return kExitOk;
        }
        if (pdec_cmd->parsed()) {
            Graph g = pdec_in.load().at(0);
            VertexSet x = VertexSet::of(parse_id_list(pdec_set));
            int s = pdec_s >= 0 ? pdec_s : x.min();
            PivotPairing pairing = decompose_set_pivot(g, x, s);
            Json pairs = Json::array();
            for (auto [u, v] : pairing.pairs) pairs.push_back(Json::array({u, v}));
            err << pairing.pairs.size() << " edge pivots\n";
            out << Json{{"pairs", pairs}, {"s", pairing.special}}.dump() << "\n";
            return kExitOk;
        }
        if (hn_cmd->parsed()) {
            Graph g = make_hn(hn_n);
            err << "H_" << hn_n << " on " << g.size() << " vertices\n";
            out << labelled_graph_to_json(g).dump() << "\n";
            return kExitOk;
        }
        if (hnpath_cmd->parsed()) {
            MinorCertificate cert = hn_path_certificate(hnpath_n);
            err << "path of length " << hnpath_n << " as a pivot-minor of H_" << hnpath_n << "\n";
            out << certificate_to_json(cert).dump() << "\n";
            return kExitOk;
        }
        if (cb_cmd->parsed()) {
            std::vector<Graph> corpus;
            CliqueBoundReport report;
            if (!cb_corpus.empty()) {
                std::ifstream in(cb_corpus);
                if (!in) throw DomainError("cannot open corpus file: " + cb_corpus);
                corpus = read_graph6_stream(in);
                report = clique_bound_experiment(cb_d, cb_nmax, &corpus, cb_threads);
            } else {
                report = clique_bound_experiment(cb_d, cb_nmax, nullptr, cb_threads);
            }
            err << "K(" << cb_d << ", n<=" << cb_nmax << ") = " << report.max_found
                << " over " << report.graphs_checked << " graphs (bound " << report.bound << ")\n";
            out << clique_report_to_json(report).dump() << "\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            MinorCertificate cert = certificate_from_json(read_json_input(verify_file));
            VerifyResult result = verify_certificate(cert);
            if (!result) {
                err << "INVALID: " << result.reason << "\n";
                return kExitNegative;
            }
            err << "certificate OK: " << to_string(cert.kind) << ", "
                << cert.script.steps.size() << " steps\n";
            return kExitOk;
        }
        if (app.get_subcommand("selftest")->parsed()) return run_selftest(err);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "JSON error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand selected\n";
    return kExitUsage;
}

// ---- selftest ----------------------------------------------------------------

namespace {

struct SelfTest {
    std::ostream& err;
    int failures = 0;

    void check(bool ok, const std::string& name) {
        err << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

} // namespace

int run_selftest(std::ostream& err) {
    SelfTest t{err};
    std::mt19937 rng(20240901);

    {
        bool ok = true;
        for (int round = 0; round < 100 && ok; ++round) {
            Graph g = random_graph(2 + static_cast<int>(rng() % 8), rng);
            int v = static_cast<int>(rng()) % g.size();
            if (v < 0) v += g.size();
            Graph lc = local_complement(g, v);
            ok = local_complement(lc, v) == g;
            // locality: no bit outside N(v) x N(v) may change
            VertexSet nb = g.neighbours(v);
            for (int a = 0; a < g.size() && ok; ++a)
                for (int b = a + 1; b < g.size() && ok; ++b)
                    if (!(nb.contains(a) && nb.contains(b)))
                        ok = g.adjacent(a, b) == lc.adjacent(a, b);
        }
        t.check(ok, "local complementation is a local involution");
    }
    {
        bool ok = true;
        for (int round = 0; round < 100 && ok; ++round) {
            Graph g = random_graph(2 + static_cast<int>(rng() % 7), rng);
            auto es = g.edges();
            if (es.empty()) continue;
            auto [u, v] = es[rng() % es.size()];
            Graph p1 = local_complement(local_complement(local_complement(g, u), v), u);
            Graph p2 = local_complement(local_complement(local_complement(g, v), u), v);
            ok = p1 == p2 && pivot_edge(pivot_edge(g, u, v), u, v) == g;
        }
        t.check(ok, "pivot symmetry G*u*v*u == G*v*u*v and involution");
    }
    {
        bool ok = true;
        for (int round = 0; round < 50 && ok; ++round) {
            Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
            std::uint64_t bits = rng();
            VertexSet x = VertexSet(bits) & g.vertices();
            VertexSet rest = g.vertices() - x;
            VertexSet y = VertexSet(static_cast<std::uint64_t>(rng())) & rest;
            ok = complement_on(complement_on(g, x), x) == g &&
                 complement_between(complement_between(g, x, y), x, y) == g;
        }
        t.check(ok, "complement_on / complement_between are involutions");
    }
    {
        bool ok = true;
        for (const Graph& g : all_graphs(5))
            ok = ok && from_graph6(to_graph6(g)) == g;
        for (int n : {20, 40, 62, 63, 64}) {
            Graph g = random_graph(n, rng);
            ok = ok && from_graph6(to_graph6(g)) == g;
        }
        t.check(ok, "graph6 round-trip (corpus n<=5 and long-form sizes)");
    }
    {
        std::set<std::string> forms;
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            Graph g(4);
            int bit = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j, ++bit)
                    if ((mask >> bit) & 1) g.add_edge(i, j);
            forms.insert(canonical_form(g));
        }
        t.check(forms.size() == 11, "canonical_form buckets the 64 labelled 4-vertex graphs into 11");
    }
    {
        bool ok = true;
        for (const Graph& g : all_graphs(4))
            for (auto [u, v] : g.edges())
                ok = ok && adjacency_matrix(pivot_edge(g, u, v)) ==
                               principal_pivot(adjacency_matrix(g), VertexSet::of({u, v}));
        t.check(ok, "edge pivot matches matrix pivot on all 4-vertex graphs");
    }
    {
        bool ok = true;
        for (int round = 0; round < 25 && ok; ++round) {
            Graph g = random_graph(2 + static_cast<int>(rng() % 5), rng);
            Gf2Matrix a = adjacency_matrix(g);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()) && ok; ++s)
                if (is_nonsingular(a, VertexSet(s))) ok = check_tucker(a, VertexSet(s));
        }
        t.check(ok, "Tucker's equivalence on random small graphs");
    }
    {
        auto cert = is_pivot_minor(cycle_graph(5), path_graph(3));
        bool ok = cert.has_value() && verify_certificate(*cert).ok;
        auto cert2 = hn_path_certificate(4);
        ok = ok && verify_certificate(cert2).ok;
        auto expanded = pivot_minor_to_vertex_minor(cert2);
        ok = ok && verify_certificate(expanded).ok;
        auto [k, witness] = sc_depth(cycle_graph(5));
        HostWitness host = sc_to_vertex_minor_host(witness);
        ok = ok && verify_certificate(host.to_certificate()).ok && host.td_bound == k + 1;
        t.check(ok, "certificates verify on emission");
    }

    err << (t.failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return t.failures == 0 ? 0 : 1;
}

} // namespace vm::cli
