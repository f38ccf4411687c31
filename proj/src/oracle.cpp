#include "semireg/oracle.hpp"

#include "semireg/errors.hpp"
#include "semireg/finder.hpp"

namespace semireg {

SearchReport brute_force_semiregular(const PermGroup& group, std::uint64_t budget) {
    SearchReport report;
    report.budget = budget;
    const std::uint64_t group_order = group.order();
    report.elements_scanned = group.for_each_element(budget, [&](const Permutation& p) {
        if (!p.is_identity() && p.is_semiregular()) {
            report.found = p;
            return false;
        }
        return true;
    });
    report.exhausted = !report.found && report.elements_scanned == group_order;
    return report;
}

std::vector<Permutation> all_semiregular(const PermGroup& group, std::uint64_t budget) {
    require(group.order() <= budget, ErrorKind::BoundExceeded,
            "all_semiregular: group order exceeds the budget");
    std::vector<Permutation> out;
    group.for_each_element(budget, [&](const Permutation& p) {
        if (!p.is_identity() && p.is_semiregular()) out.push_back(p);
        return true;
    });
    return out;
}

namespace {

VerifyResult verify_common(const Certificate& cert, const PermGroup& group) {
    VerifyResult r;
    if (cert.element.degree() != group.degree()) {
        r.reason = "element degree does not match the group degree";
        return r;
    }
    if (cert.element.is_identity()) {
        r.reason = "element is the identity";
        return r;
    }
    auto common = cert.element.uniform_cycle_length();
    if (!common) {
        r.reason = "cycle lengths are not uniform";
        return r;
    }
    if (*common != cert.cycle_length) {
        r.reason = "stated cycle length does not match the element";
        return r;
    }
    if (cert.element.order() != cert.order) {
        r.reason = "stated order does not match the element";
        return r;
    }
    if (!group.contains(cert.element)) {
        r.reason = "element is not a member of the group";
        return r;
    }
    r.ok = true;
    return r;
}

} // namespace

VerifyResult verify_certificate(const Certificate& cert, const PermGroup& group) {
    return verify_common(cert, group);
}

VerifyResult verify_certificate(const Certificate& cert, const Graph& graph,
                                const PermGroup& group) {
    VerifyResult r = verify_common(cert, group);
    if (!r.ok) return r;
    if (graph.vertex_count() != cert.element.degree()) {
        r.ok = false;
        r.reason = "element degree does not match the vertex count";
        return r;
    }
    if (!preserves_graph(graph, cert.element)) {
        r.ok = false;
        r.reason = "element maps an edge to a non-edge";
        return r;
    }
    return r;
}

VerifyResult verify_certificate(const Certificate& cert, const Digraph& digraph,
                                const PermGroup& group) {
    VerifyResult r = verify_common(cert, group);
    if (!r.ok) return r;
    if (digraph.vertex_count() != cert.element.degree()) {
        r.ok = false;
        r.reason = "element degree does not match the vertex count";
        return r;
    }
    if (!preserves_digraph(digraph, cert.element)) {
        r.ok = false;
        r.reason = "element maps an arc to a non-arc";
        return r;
    }
    return r;
}

} // namespace semireg
