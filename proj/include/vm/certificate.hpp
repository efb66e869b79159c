#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vm/graph.hpp"
#include "vm/script.hpp"
#include "vm/treedepth_types.hpp"

namespace vm {

enum class MinorKind { VertexMinor, PivotMinor };

std::string to_string(MinorKind kind);

struct MatrixWitness {
    VertexSet x;  // pivoted set, A(host)[X] non-singular
    VertexSet y;  // restriction set
};

// Replayable witness that `target` is a vertex-minor / pivot-minor of `host`.
// `mapping[t]` is the surviving host vertex playing target vertex t.
//
// A certificate may additionally carry a tree-depth decomposition of the
// host (the host-witness form emitted by the construction routines); the
// verifier then also checks closure containment, the depth bound, and that
// the script rewrites only outside the mapped target vertices.
struct MinorCertificate {
    MinorKind kind = MinorKind::VertexMinor;
    Graph host;
    Graph target;
    Script script;
    std::vector<int> mapping;
    std::optional<MatrixWitness> matrix_witness;

    std::optional<TreeDepthDecomposition> host_forest;
    int td_bound = -1;  // meaningful only with host_forest
};

struct VerifyResult {
    bool ok = true;
    std::string reason;

    explicit operator bool() const { return ok; }

    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
    static VerifyResult pass() { return {}; }
};

VerifyResult verify_certificate(const MinorCertificate& cert);

// Expand every PIVOT(u,v) into LC(u), LC(v), LC(u) and re-verify. Input must
// be a valid pivot-minor certificate.
MinorCertificate pivot_minor_to_vertex_minor(const MinorCertificate& cert);

} // namespace vm
