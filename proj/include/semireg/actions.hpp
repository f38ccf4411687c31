#pragma once

#include "semireg/graph.hpp"
#include "semireg/group.hpp"
#include "semireg/partition.hpp"
#include "semireg/structure.hpp"

namespace semireg {

// The quotient of a graph by the orbits of a normal subgroup, together with
// the kernel of the ambient group's action on the orbits and the induced
// action on quotient vertices. Quotient vertices are the orbits ordered by
// their minimum element.
struct QuotientData {
    Graph quotient;
    Partition orbits;
    std::vector<int> orbit_map; // vertex -> quotient vertex
    PermGroup induced_group;    // degree = number of orbits, generator-aligned with the source
    PermGroup kernel;           // elements fixing every orbit setwise
    bool intra_orbit_edges = false;

    // Image of an arbitrary element of the ambient group on quotient vertices.
    Permutation project(const Permutation& g) const;
};

// N must be normal in G and both must act on the vertices of `graph`.
QuotientData quotient_graph(const Graph& graph, const PermGroup& group, const PermGroup& normal);

// The permutation group induced on the neighborhood of v by the stabilizer
// of v. Generators must preserve the graph.
PermGroup local_action(const Graph& graph, const PermGroup& group, int v);
// Same on the out-neighborhood of v in a digraph.
PermGroup local_action_out(const Digraph& digraph, const PermGroup& group, int v);

// If the quotient has the same valency as the graph, checks that the kernel
// equals N and that N is semiregular (anything else is an invariant
// violation) and returns true; otherwise returns false. N needs at least
// three orbits.
bool check_same_valency_semiregular(const Graph& graph, const PermGroup& normal,
                                    const QuotientData& data);

} // namespace semireg
