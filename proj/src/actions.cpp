#include "semireg/actions.hpp"

#include <algorithm>

#include "semireg/errors.hpp"

namespace semireg {

Permutation QuotientData::project(const Permutation& g) const {
    InducedAction action{induced_group, orbits};
    return action.project(g);
}

QuotientData quotient_graph(const Graph& graph, const PermGroup& group, const PermGroup& normal) {
    require(normal.degree() == graph.vertex_count() && group.degree() == graph.vertex_count(),
            ErrorKind::DegreeMismatch, "group degree does not match vertex count");
    for (const auto& n : normal.generators())
        require(group.contains(n), ErrorKind::Precondition, "N is not a subgroup of G");
    for (const auto& n : normal.generators())
        for (const auto& g : group.generators())
            require(normal.contains(conjugate(n, g)), ErrorKind::NotNormal,
                    "N is not normal in G");

    QuotientData data;
    data.orbits = normal.orbit_partition();
    data.orbit_map = data.orbits.block_of;

    InducedAction action = induced_action_on_partition(group, data.orbits);
    data.induced_group = action.group;
    data.kernel = kernel_on_partition(group, data.orbits);

    std::vector<std::pair<int, int>> qedges;
    for (auto [u, v] : graph.edges()) {
        int bu = data.orbit_map[u], bv = data.orbit_map[v];
        if (bu == bv)
            data.intra_orbit_edges = true;
        else
            qedges.emplace_back(std::min(bu, bv), std::max(bu, bv));
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    data.quotient = Graph::from_edges(data.orbits.size(), qedges);

    if (graph.is_connected())
        require(data.quotient.is_connected(), ErrorKind::InvariantViolation,
                "quotient of a connected graph is disconnected");
    return data;
}

PermGroup local_action(const Graph& graph, const PermGroup& group, int v) {
    require(v >= 0 && v < graph.vertex_count(), ErrorKind::Precondition, "vertex out of range");
    for (const auto& g : group.generators())
        require(preserves_graph(graph, g), ErrorKind::NotAutomorphism,
                "group does not preserve the graph");
    return local_restriction(group, v, graph.neighbors(v));
}

PermGroup local_action_out(const Digraph& digraph, const PermGroup& group, int v) {
    require(v >= 0 && v < digraph.vertex_count(), ErrorKind::Precondition, "vertex out of range");
    for (const auto& g : group.generators())
        require(preserves_digraph(digraph, g), ErrorKind::NotAutomorphism,
                "group does not preserve the digraph");
    std::vector<int> domain = digraph.out_neighbors(v);
    return local_restriction(group, v, domain);
}

bool check_same_valency_semiregular(const Graph& graph, const PermGroup& normal,
                                    const QuotientData& data) {
    require(data.orbits.size() >= 3, ErrorKind::TooManyOrbits,
            "same-valency check needs at least three orbits");
    auto valency = graph.regular_valency();
    auto qvalency = data.quotient.regular_valency();
    require(valency.has_value(), ErrorKind::Precondition, "graph is not regular");
    if (!qvalency || *qvalency != *valency) return false;
    require(data.kernel.same_group_as(normal), ErrorKind::InvariantViolation,
            "same quotient valency but the kernel differs from N");
    require(normal.is_semiregular(), ErrorKind::InvariantViolation,
            "same quotient valency but N is not semiregular");
    return true;
}

} // namespace semireg
