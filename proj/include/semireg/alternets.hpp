#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "semireg/actions.hpp"
#include "semireg/graph.hpp"
#include "semireg/group.hpp"

namespace semireg {

// Partition of a digraph's arcs into the equivalence classes of the
// transitive closure of "shares a tail or shares a head", with per-class
// source and sink vertex sets. Classes are numbered by their smallest arc;
// arcs are indexed in the digraph's sorted arc order.
struct AlternetPartition {
    Digraph digraph;
    std::vector<std::vector<int>> classes; // arc indices, sorted
    std::vector<int> class_of_arc;
    std::vector<std::vector<int>> sources; // per class, sorted tails
    std::vector<std::vector<int>> sinks;   // per class, sorted heads

    int class_count() const { return static_cast<int>(classes.size()); }
};

AlternetPartition alternet_partition(const Digraph& digraph);

// Some head of the class is also one of its tails.
bool is_degenerate(const AlternetPartition& partition, int cls);
bool has_degenerate_class(const AlternetPartition& partition);

// |arcs| = |sources| * |sinks|; requires the class to be non-degenerate.
bool is_complete_bipartite(const AlternetPartition& partition, int cls);

// Every sink set meets every other source set in at most one vertex.
bool is_loosely_attached(const AlternetPartition& partition);

// Digraph on the classes with an arc (A,B) whenever sinks(A) meets
// sources(B); also returns vertex -> class of its out-arcs (-1 for vertices
// with no out-arc).
std::pair<Digraph, std::vector<int>> alternet_digraph(const AlternetPartition& partition);

// Action of the group on alternet classes, generator-aligned with the source
// group. With `assert_faithful` the kernel must be trivial.
struct AlternetAction {
    PermGroup group;
    std::function<Permutation(const Permutation&)> project;
};
AlternetAction induced_group_on_alternets(const PermGroup& group,
                                          const AlternetPartition& partition,
                                          bool assert_faithful);

// Partitions the vertices by their (in-neighborhood, out-neighborhood) pair;
// all classes must share one size c >= 2. Returns the automorphism cycling
// each class one step in sorted vertex order; it is semiregular of order c.
Permutation duplicate_class_semiregular(const Digraph& digraph);

// For a 2-valent quotient cycle: orients the cycle (vertex 0 toward its
// smaller neighbor), lifts the orientation edge-wise to the graph, and
// returns the oriented digraph with the orientation-preserving subgroup.
std::pair<Digraph, PermGroup> derive_orientation(const Graph& graph, const PermGroup& group,
                                                 const QuotientData& data);

} // namespace semireg
