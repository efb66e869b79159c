#include "vm/serialize.hpp"

#include "vm/graph6.hpp"

namespace vm {

namespace {

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(e.get<int>());
    return out;
}

VertexSet set_from_json(const Json& j, const char* what) {
    return VertexSet::of(int_vector(j, what));
}

Json set_to_json(VertexSet s) { return Json(s.to_vector()); }

} // namespace

Json labelled_graph_to_json(const Graph& g) {
    Json j;
    j["graph6"] = to_graph6(g);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph labelled_graph_from_json(const Json& j) {
    Graph g = from_graph6(j.at("graph6").get<std::string>());
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
}

Json script_to_json(const Script& s) {
    Json steps = Json::array();
    for (const Step& step : s.steps) {
        Json e;
        switch (step.kind) {
            case Step::Kind::LocalComplement:
                e["op"] = "lc";
                e["v"] = step.u;
                break;
            case Step::Kind::Pivot:
                e["op"] = "pivot";
                e["u"] = step.u;
                e["v"] = step.v;
                break;
            case Step::Kind::Delete:
                e["op"] = "delete";
                e["v"] = step.u;
                break;
        }
        steps.push_back(std::move(e));
    }
    return steps;
}

Script script_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("script must be an array of steps");
    Script s;
    for (const auto& e : j) {
        const std::string op = e.at("op").get<std::string>();
        if (op == "lc")
            s.steps.push_back(Step::lc(e.at("v").get<int>()));
        else if (op == "pivot")
            s.steps.push_back(Step::pivot(e.at("u").get<int>(), e.at("v").get<int>()));
        else if (op == "delete")
            s.steps.push_back(Step::del(e.at("v").get<int>()));
        else
            throw DomainError("unknown script op: " + op);
    }
    return s;
}

Json treedepth_to_json(const TreeDepthDecomposition& t) {
    Json j;
    j["parent"] = t.parent;
    j["height"] = t.height();
    return j;
}

TreeDepthDecomposition treedepth_from_json(const Json& j) {
    TreeDepthDecomposition t;
    t.parent = int_vector(j.at("parent"), "parent");
    return t;
}

Json certificate_to_json(const MinorCertificate& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["host"] = to_graph6(c.host);
    j["target"] = to_graph6(c.target);
    j["script"] = script_to_json(c.script);
    Json mapping = Json::object();
    for (std::size_t t = 0; t < c.mapping.size(); ++t)
        mapping[std::to_string(t)] = c.mapping[t];
    j["mapping"] = std::move(mapping);
    if (c.matrix_witness) {
        j["matrix_witness"] = Json{{"X", set_to_json(c.matrix_witness->x)},
                                   {"Y", set_to_json(c.matrix_witness->y)}};
    }
    if (c.host.has_labels()) j["host_labels"] = c.host.labels();
    if (c.target.has_labels()) j["target_labels"] = c.target.labels();
    if (c.host_forest) {
        j["treedepth"] = treedepth_to_json(*c.host_forest);
        j["td_bound"] = c.td_bound;
    }
    return j;
}

MinorCertificate certificate_from_json(const Json& j) {
    MinorCertificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vertex-minor")
        c.kind = MinorKind::VertexMinor;
    else if (kind == "pivot-minor")
        c.kind = MinorKind::PivotMinor;
    else
        throw DomainError("unknown certificate kind: " + kind);
    c.host = from_graph6(j.at("host").get<std::string>());
    c.target = from_graph6(j.at("target").get<std::string>());
    if (j.contains("host_labels"))
        c.host.set_labels(j.at("host_labels").get<std::vector<std::string>>());
    if (j.contains("target_labels"))
        c.target.set_labels(j.at("target_labels").get<std::vector<std::string>>());
    c.script = script_from_json(j.at("script"));

    const Json& mapping = j.at("mapping");
    if (!mapping.is_object()) throw DomainError("mapping must be an object");
    c.mapping.assign(static_cast<std::size_t>(c.target.size()), -1);
    for (auto it = mapping.begin(); it != mapping.end(); ++it) {
        std::size_t t = 0;
        try {
            t = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (...) {
            throw DomainError("mapping key is not a vertex id: " + it.key());
        }
        if (t >= c.mapping.size())
            throw DomainError("mapping key out of target range: " + it.key());
        c.mapping[t] = it.value().get<int>();
    }
    for (std::size_t t = 0; t < c.mapping.size(); ++t)
        if (c.mapping[t] < 0)
            throw DomainError("mapping is missing target vertex " + std::to_string(t));

    if (j.contains("matrix_witness")) {
        const Json& w = j.at("matrix_witness");
        c.matrix_witness = MatrixWitness{set_from_json(w.at("X"), "matrix_witness.X"),
                                         set_from_json(w.at("Y"), "matrix_witness.Y")};
    }
    if (j.contains("treedepth")) {
        c.host_forest = treedepth_from_json(j.at("treedepth"));
        c.td_bound = j.value("td_bound", -1);
    }
    return c;
}

// ---- decompositions --------------------------------------------------------

namespace {

Json sc_node_to_json(const ScNode& node) {
    if (node.is_leaf()) return Json(node.leaf);
    Json j;
    Json children = Json::array();
    for (const ScNode& child : node.children) children.push_back(sc_node_to_json(child));
    j["children"] = std::move(children);
    j["X"] = set_to_json(node.x);
    return j;
}

ScNode sc_node_from_json(const Json& j) {
    if (j.is_number_integer()) return ScNode{j.get<int>(), {}, VertexSet{}};
    ScNode node;
    for (const auto& child : j.at("children")) node.children.push_back(sc_node_from_json(child));
    node.x = set_from_json(j.at("X"), "X");
    return node;
}

Json bsc_node_to_json(const BscNode& node) {
    if (node.is_leaf()) return Json(node.leaf);
    Json j;
    Json children = Json::array();
    for (const BscNode& child : node.children) children.push_back(bsc_node_to_json(child));
    j["children"] = std::move(children);
    j["X"] = set_to_json(node.x);
    j["Y"] = set_to_json(node.y);
    return j;
}

BscNode bsc_node_from_json(const Json& j) {
    if (j.is_number_integer()) return BscNode{j.get<int>(), {}, VertexSet{}, VertexSet{}};
    BscNode node;
    for (const auto& child : j.at("children")) node.children.push_back(bsc_node_from_json(child));
    node.x = set_from_json(j.at("X"), "X");
    node.y = set_from_json(j.at("Y"), "Y");
    return node;
}

} // namespace

Json sc_to_json(const ScDecomposition& d) { return sc_node_to_json(d.root); }
ScDecomposition sc_from_json(const Json& j) { return {sc_node_from_json(j)}; }

Json bsc_to_json(const BscDecomposition& d) { return bsc_node_to_json(d.root); }
BscDecomposition bsc_from_json(const Json& j) { return {bsc_node_from_json(j)}; }

// ---- tree-models -----------------------------------------------------------

namespace {

Json tm_node_to_json(const TmNode& node) {
    if (node.is_leaf()) return Json(node.leaf);
    Json arr = Json::array();
    for (const TmNode& child : node.children) arr.push_back(tm_node_to_json(child));
    return arr;
}

TmNode tm_node_from_json(const Json& j) {
    if (j.is_number_integer()) return TmNode{j.get<int>(), {}};
    if (!j.is_array()) throw DomainError("tree-model node must be an integer leaf or an array");
    TmNode node;
    for (const auto& child : j) node.children.push_back(tm_node_from_json(child));
    return node;
}

int tm_depth(const TmNode& node) {
    if (node.is_leaf()) return 0;
    int d = 0;
    for (const TmNode& child : node.children) d = std::max(d, 1 + tm_depth(child));
    return d;
}

} // namespace

Json tree_model_to_json(const TreeModel& tm) {
    Json j;
    j["tree"] = tm_node_to_json(tm.root);
    j["colors"] = tm.colour;
    Json sig = Json::array();
    for (const auto& e : tm.signature)
        sig.push_back(Json{{"c1", e.c1}, {"c2", e.c2}, {"dist", e.dist}, {"edge", e.edge}});
    j["signature"] = std::move(sig);
    j["m"] = tm.colours;
    j["depth"] = tm.depth;
    return j;
}

TreeModel tree_model_from_json(const Json& j) {
    TreeModel tm;
    tm.root = tm_node_from_json(j.at("tree"));
    tm.colour = int_vector(j.at("colors"), "colors");
    for (const auto& e : j.at("signature"))
        tm.signature.push_back({e.at("c1").get<int>(), e.at("c2").get<int>(),
                                e.at("dist").get<int>(), e.at("edge").get<bool>()});
    tm.depth = j.value("depth", tm_depth(tm.root));
    int max_colour = -1;
    for (int c : tm.colour) max_colour = std::max(max_colour, c);
    tm.colours = j.value("m", max_colour + 1);
    return tm;
}

Json orbit_to_json(const OrbitResult& orbit) {
    Json j;
    j["size"] = orbit.members.size();
    j["truncated"] = orbit.truncated;
    Json members = Json::array();
    for (const auto& [form, script] : orbit.members)
        members.push_back(Json{{"graph6", form}, {"script", script_to_json(script)}});
    j["members"] = std::move(members);
    return j;
}

Json clique_report_to_json(const CliqueBoundReport& r) {
    Json j;
    j["d"] = r.d;
    j["n_max"] = r.n_max;
    j["bound"] = r.bound;
    j["max_found"] = r.max_found;
    j["graphs_checked"] = r.graphs_checked;
    j["witness_count"] = r.witness_count;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(Json{{"graph6", to_graph6(w.host)},
                                 {"t", w.t},
                                 {"certificate", certificate_to_json(w.certificate)}});
    j["witnesses"] = std::move(witnesses);
    return j;
}

} // namespace vm
