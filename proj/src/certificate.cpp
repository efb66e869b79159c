#include "vm/certificate.hpp"

#include <algorithm>

#include "vm/canonical.hpp"
#include "vm/gf2.hpp"
#include "vm/treedepth.hpp"

namespace vm {

std::string to_string(MinorKind kind) {
    return kind == MinorKind::VertexMinor ? "vertex-minor" : "pivot-minor";
}

VerifyResult verify_certificate(const MinorCertificate& cert) {
    const int nh = cert.host.size();
    const int nt = cert.target.size();
    if (nt > nh) return VerifyResult::fail("target has more vertices than host");

    for (std::size_t i = 0; i < cert.script.steps.size(); ++i) {
        const Step& s = cert.script.steps[i];
        if (cert.kind == MinorKind::PivotMinor && s.kind == Step::Kind::LocalComplement)
            return VerifyResult::fail("pivot-minor certificate contains an LC step (index " +
                                      std::to_string(i) + ")");
    }

    ReplayResult replayed;
    try {
        replayed = apply_script(cert.host, cert.script);
    } catch (const Error& e) {
        return VerifyResult::fail(std::string("script replay failed: ") + e.what());
    }

    if (static_cast<int>(cert.mapping.size()) != nt)
        return VerifyResult::fail("mapping size does not match target order");
    if (replayed.graph.size() != nt)
        return VerifyResult::fail("script leaves " + std::to_string(replayed.graph.size()) +
                                  " vertices, target has " + std::to_string(nt));

    // mapping must be a bijection onto the survivors
    std::vector<int> position(static_cast<std::size_t>(nh), -1);
    for (std::size_t i = 0; i < replayed.host_ids.size(); ++i)
        position[static_cast<std::size_t>(replayed.host_ids[i])] = static_cast<int>(i);
    std::vector<bool> hit(replayed.host_ids.size(), false);
    for (int t = 0; t < nt; ++t) {
        int h = cert.mapping[static_cast<std::size_t>(t)];
        if (h < 0 || h >= nh || position[static_cast<std::size_t>(h)] < 0)
            return VerifyResult::fail("mapping image " + std::to_string(h) +
                                      " is not a surviving host vertex");
        int p = position[static_cast<std::size_t>(h)];
        if (hit[static_cast<std::size_t>(p)])
            return VerifyResult::fail("mapping is not injective at host vertex " + std::to_string(h));
        hit[static_cast<std::size_t>(p)] = true;
    }

    for (int a = 0; a < nt; ++a)
        for (int b = a + 1; b < nt; ++b) {
            int pa = position[static_cast<std::size_t>(cert.mapping[static_cast<std::size_t>(a)])];
            int pb = position[static_cast<std::size_t>(cert.mapping[static_cast<std::size_t>(b)])];
            if (cert.target.adjacent(a, b) != replayed.graph.adjacent(pa, pb))
                return VerifyResult::fail("adjacency mismatch at target pair (" + std::to_string(a) +
                                          "," + std::to_string(b) + ")");
        }

    if (cert.matrix_witness) {
        if (cert.kind != MinorKind::PivotMinor)
            return VerifyResult::fail("matrix witness on a vertex-minor certificate");
        const auto& w = *cert.matrix_witness;
        Graph viaMatrix;
        try {
            viaMatrix = pivot_minor_by_matrix(cert.host, w.x, w.y);
        } catch (const Error& e) {
            return VerifyResult::fail(std::string("matrix witness invalid: ") + e.what());
        }
        const auto ys = w.y.to_vector();
        if (static_cast<int>(ys.size()) != nt)
            return VerifyResult::fail("matrix witness Y has wrong size");
        VertexSet image;
        for (int h : cert.mapping) image.add(h);
        if (image == w.y) {
            // Y is exactly the mapped image: compare under the mapping
            std::vector<int> y_pos(static_cast<std::size_t>(nh), -1);
            for (std::size_t i = 0; i < ys.size(); ++i)
                y_pos[static_cast<std::size_t>(ys[i])] = static_cast<int>(i);
            for (int a = 0; a < nt; ++a)
                for (int b = a + 1; b < nt; ++b) {
                    int pa = y_pos[static_cast<std::size_t>(cert.mapping[static_cast<std::size_t>(a)])];
                    int pb = y_pos[static_cast<std::size_t>(cert.mapping[static_cast<std::size_t>(b)])];
                    if (cert.target.adjacent(a, b) != viaMatrix.adjacent(pa, pb))
                        return VerifyResult::fail("matrix witness disagrees with target at pair (" +
                                                  std::to_string(a) + "," + std::to_string(b) + ")");
                }
        } else if (!find_isomorphism(cert.target, viaMatrix)) {
            return VerifyResult::fail("matrix witness graph is not isomorphic to target");
        }
    }

    if (cert.host_forest) {
        const auto& forest = *cert.host_forest;
        auto td_check = verify_td(cert.host, forest, cert.td_bound);
        if (!td_check)
            return VerifyResult::fail("host tree-depth decomposition invalid: " + td_check.reason);

        VertexSet image;
        for (int h : cert.mapping) image.add(h);
        VertexSet rewritten, deleted;
        for (const Step& s : cert.script.steps) {
            switch (s.kind) {
                case Step::Kind::LocalComplement: rewritten.add(s.u); break;
                case Step::Kind::Pivot:
                    rewritten.add(s.u);
                    rewritten.add(s.v);
                    break;
                case Step::Kind::Delete: deleted.add(s.u); break;
            }
        }
        if (rewritten.intersects(image))
            return VerifyResult::fail("script rewrites inside the target vertex set");
        if (!(deleted == (cert.host.vertices() - image)))
            return VerifyResult::fail("script deletions do not equal V(U) \\ V(G)");
    }

    return VerifyResult::pass();
}

MinorCertificate pivot_minor_to_vertex_minor(const MinorCertificate& cert) {
    if (cert.kind != MinorKind::PivotMinor)
        throw DomainError("pivot_minor_to_vertex_minor expects a pivot-minor certificate");
    if (auto check = verify_certificate(cert); !check)
        throw DomainError("input certificate does not verify: " + check.reason);

    MinorCertificate out = cert;
    out.kind = MinorKind::VertexMinor;
    out.matrix_witness.reset();
    out.script.steps.clear();
    for (const Step& s : cert.script.steps) {
        if (s.kind == Step::Kind::Pivot) {
            out.script.steps.push_back(Step::lc(s.u));
            out.script.steps.push_back(Step::lc(s.v));
            out.script.steps.push_back(Step::lc(s.u));
        } else {
            out.script.steps.push_back(s);
        }
    }
    if (auto check = verify_certificate(out); !check)
        throw InternalError("expanded vertex-minor certificate failed to verify: " + check.reason);
    return out;
}

} // namespace vm
