#pragma once

#include <string>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// One graph-rewriting step. Vertices are host original ids: ids keep their
// meaning across deletions, so scripts replay deterministically.
struct Step {
    enum class Kind { LocalComplement, Pivot, Delete };
    Kind kind;
    int u = -1;  // LC / Delete vertex, or first pivot endpoint
    int v = -1;  // second pivot endpoint

    static Step lc(int v) { return {Kind::LocalComplement, v, -1}; }
    static Step pivot(int u, int v) { return {Kind::Pivot, u, v}; }
    static Step del(int v) { return {Kind::Delete, v, -1}; }

    friend bool operator==(const Step& a, const Step& b) {
        return a.kind == b.kind && a.u == b.u && a.v == b.v;
    }
};

struct Script {
    std::vector<Step> steps;

    bool deletions_only() const {
        for (const Step& s : steps)
            if (s.kind != Step::Kind::Delete) return false;
        return true;
    }

    friend bool operator==(const Script& a, const Script& b) { return a.steps == b.steps; }
};

std::string to_string(const Step& step);
std::string to_string(const Script& script);

// Final graph of a replay plus the surviving host ids: host_ids[i] is the
// original id of dense vertex i, ascending.
struct ReplayResult {
    Graph graph;
    std::vector<int> host_ids;

    VertexSet survivors() const { return VertexSet::of(host_ids); }
};

// Replay a script on g. Every step is validated against the current state;
// the first invalid step is reported with its index.
ReplayResult apply_script(const Graph& g, const Script& script);

} // namespace vm
