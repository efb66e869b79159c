#include <doctest.h>

#include "vm/constructions.hpp"
#include "vm/graph6.hpp"
#include "vm/minors.hpp"
#include "vm/scdepth.hpp"
#include "vm/serialize.hpp"
#include "vm/treemodel.hpp"

using namespace vm;

TEST_CASE("certificate JSON follows the documented schema") {
    auto cert = is_pivot_minor(path_graph(3), edgeless_graph(2));
    REQUIRE(cert.has_value());
    Json j = certificate_to_json(*cert);

    CHECK(j.at("kind") == "pivot-minor");
    CHECK(j.at("host").is_string());
    CHECK(j.at("target").is_string());
    CHECK(j.at("script").is_array());
    CHECK(j.at("mapping").is_object());
    CHECK(j.at("matrix_witness").at("X").is_array());
    CHECK(j.at("matrix_witness").at("Y").is_array());

    // the exact wire format of steps
    for (const auto& step : j.at("script")) {
        std::string op = step.at("op").get<std::string>();
        CHECK((op == "lc" || op == "pivot" || op == "delete"));
        CHECK(step.contains("v"));
        if (op == "pivot") CHECK(step.contains("u"));
    }

    MinorCertificate back = certificate_from_json(j);
    CHECK(verify_certificate(back).ok);
    CHECK(certificate_to_json(back) == j);
}

TEST_CASE("the exact schema example parses") {
    // same shape as the interface documentation
    Json j = Json::parse(R"({
        "kind": "pivot-minor",
        "host": "DqK",
        "target": "A?",
        "script": [{"op":"pivot","u":0,"v":1},{"op":"delete","v":0},{"op":"delete","v":3},{"op":"delete","v":4}],
        "mapping": {"0":1, "1":2},
        "matrix_witness": {"X": [0,1], "Y": [1,2]}
    })");
    MinorCertificate cert = certificate_from_json(j);
    CHECK(cert.kind == MinorKind::PivotMinor);
    CHECK(cert.script.steps.size() == 4);
    CHECK(cert.mapping == std::vector<int>{1, 2});
}

TEST_CASE("host-witness certificates round-trip with their forest") {
    auto [k, witness] = sc_depth(cycle_graph(5));
    HostWitness w = sc_to_vertex_minor_host(witness);
    Json j = certificate_to_json(w.to_certificate());
    CHECK(j.contains("treedepth"));
    CHECK(j.at("td_bound") == k + 1);
    MinorCertificate back = certificate_from_json(j);
    CHECK(back.host_forest.has_value());
    CHECK(verify_certificate(back).ok);
}

TEST_CASE("labels ride in the sidecar and in certificates") {
    Graph h = make_hn(2);
    Json j = labelled_graph_to_json(h);
    CHECK(j.at("graph6").is_string());
    CHECK(j.at("labels").size() == 4);
    Graph back = labelled_graph_from_json(j);
    CHECK(back == h);
    CHECK(back.labels() == h.labels());

    Json cj = certificate_to_json(hn_path_certificate(3));
    CHECK(cj.at("host_labels").size() == 6);
    MinorCertificate cert = certificate_from_json(cj);
    CHECK(cert.host.labels() == make_hn(3).labels());
}

TEST_CASE("scripts reject unknown ops") {
    CHECK_THROWS_AS(script_from_json(Json::parse(R"([{"op":"swap","v":0}])")), DomainError);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"({"op":"lc"})")), DomainError);
}

TEST_CASE("mappings must be complete bijection tables") {
    Json j = certificate_to_json(*is_pivot_minor(path_graph(3), edgeless_graph(2)));
    j["mapping"].erase("1");
    CHECK_THROWS_AS(certificate_from_json(j), DomainError);
    j["mapping"]["7"] = 0;
    CHECK_THROWS_AS(certificate_from_json(j), DomainError);
}

TEST_CASE("SC and BSC decompositions round-trip through JSON") {
    auto [ks, sc] = sc_depth(cycle_graph(5));
    Json js = sc_to_json(sc);
    ScDecomposition sc_back = sc_from_json(js);
    CHECK(eval_sc(sc_back) == cycle_graph(5));
    CHECK(sc_back.depth() == ks);
    CHECK(sc_to_json(sc_back) == js);

    auto [kb, bsc] = bsc_depth(complete_graph(4));
    Json jb = bsc_to_json(bsc);
    BscDecomposition bsc_back = bsc_from_json(jb);
    CHECK(eval_bsc(bsc_back) == complete_graph(4));
    CHECK(bsc_back.depth() == kb);

    // leaves are plain integers, internal nodes carry children + sets
    ScNode leaf_probe = sc_from_json(Json(3)).root;
    CHECK(leaf_probe.leaf == 3);
    Json single = Json::parse(R"({"children":[0,1],"X":[0,1]})");
    CHECK(eval_sc(sc_from_json(single)) == complete_graph(2));
    Json pair = Json::parse(R"({"children":[0,1],"X":[0],"Y":[1]})");
    CHECK(eval_bsc(bsc_from_json(pair)) == complete_graph(2));
}

TEST_CASE("tree-models round-trip through JSON") {
    auto tm = find_tree_model(complete_bipartite(2, 2), 1, 2);
    REQUIRE(tm.has_value());
    Json j = tree_model_to_json(*tm);
    CHECK(j.at("tree").is_array());
    CHECK(j.at("colors").is_array());
    CHECK(j.at("signature").is_array());
    TreeModel back = tree_model_from_json(j);
    CHECK(eval_tree_model(back) == complete_bipartite(2, 2));

    // nested-array tree with depth 2
    auto tm2 = find_tree_model(path_graph(4), 2, 2);
    REQUIRE(tm2.has_value());
    TreeModel back2 = tree_model_from_json(tree_model_to_json(*tm2));
    CHECK(eval_tree_model(back2) == path_graph(4));
}

TEST_CASE("orbit and clique reports serialize with stable keys") {
    OrbitResult orbit = local_equivalence_orbit(path_graph(3));
    Json jo = orbit_to_json(orbit);
    CHECK(jo.at("size") == 2);
    CHECK(jo.at("truncated") == false);
    CHECK(jo.at("members").size() == 2);

    CliqueBoundReport report = clique_bound_experiment(1, 3);
    Json jr = clique_report_to_json(report);
    CHECK(jr.at("d") == 1);
    CHECK(jr.at("bound") == 1);
    CHECK(jr.at("max_found") == 1);
    CHECK(jr.at("witnesses").is_array());
}
