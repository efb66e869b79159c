#pragma once

#include <json.hpp>

#include "vm/certificate.hpp"
#include "vm/constructions.hpp"
#include "vm/minors.hpp"
#include "vm/scdepth.hpp"
#include "vm/script.hpp"
#include "vm/treedepth.hpp"
#include "vm/treemodel.hpp"

namespace vm {

using Json = nlohmann::json;

// Graphs travel as graph6 strings; labels ride in a JSON sidecar
// {"graph6": "...", "labels": [...]}.
Json labelled_graph_to_json(const Graph& g);
Graph labelled_graph_from_json(const Json& j);

Json script_to_json(const Script& s);
Script script_from_json(const Json& j);

Json certificate_to_json(const MinorCertificate& c);
MinorCertificate certificate_from_json(const Json& j);

Json treedepth_to_json(const TreeDepthDecomposition& t);
TreeDepthDecomposition treedepth_from_json(const Json& j);

Json sc_to_json(const ScDecomposition& d);
ScDecomposition sc_from_json(const Json& j);

Json bsc_to_json(const BscDecomposition& d);
BscDecomposition bsc_from_json(const Json& j);

Json tree_model_to_json(const TreeModel& tm);
TreeModel tree_model_from_json(const Json& j);

Json orbit_to_json(const OrbitResult& orbit);

Json clique_report_to_json(const CliqueBoundReport& r);

} // namespace vm
