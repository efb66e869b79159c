#include "vm/script.hpp"

#include <algorithm>
#include <numeric>

namespace vm {

std::string to_string(const Step& step) {
    switch (step.kind) {
        case Step::Kind::LocalComplement: return "LC(" + std::to_string(step.u) + ")";
        case Step::Kind::Pivot:
            return "PIVOT(" + std::to_string(step.u) + "," + std::to_string(step.v) + ")";
        case Step::Kind::Delete: return "DELETE(" + std::to_string(step.u) + ")";
    }
    return "?";
}

std::string to_string(const Script& script) {
    std::string out = "[";
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(script.steps[i]);
    }
    return out + "]";
}

ReplayResult apply_script(const Graph& g, const Script& script) {
    Graph cur = g;
    std::vector<int> ids(static_cast<std::size_t>(g.size()));
    std::iota(ids.begin(), ids.end(), 0);

    auto locate = [&](int host_id, std::size_t step_index) -> int {
        auto it = std::find(ids.begin(), ids.end(), host_id);
        if (it == ids.end())
            throw DomainError("script step " + std::to_string(step_index) + " (" +
                              to_string(script.steps[step_index]) + ") references vertex " +
                              std::to_string(host_id) + " which is absent at that point");
        return static_cast<int>(it - ids.begin());
    };

    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const Step& step = script.steps[i];
        switch (step.kind) {
            case Step::Kind::LocalComplement: {
                cur = local_complement(cur, locate(step.u, i));
                break;
            }
            case Step::Kind::Pivot: {
                int u = locate(step.u, i), v = locate(step.v, i);
                if (!cur.adjacent(u, v))
                    throw DomainError("script step " + std::to_string(i) + " (" + to_string(step) +
                                      ") pivots a non-edge");
                cur = pivot_edge(cur, u, v);
                break;
            }
            case Step::Kind::Delete: {
                int v = locate(step.u, i);
                cur = induced_subgraph(cur, cur.vertices() - VertexSet::single(v));
                ids.erase(ids.begin() + v);
                break;
            }
        }
    }
    return {std::move(cur), std::move(ids)};
}

} // namespace vm
