#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semireg/group.hpp"

namespace semireg {

// Simple undirected graph; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree_of(int v) const { return static_cast<int>(adj_[v].size()); }

    // Uniform valency, or nullopt when irregular.
    std::optional<int> regular_valency() const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // u < v, sorted
    bool is_connected() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

// Digraph given by an arbitrary set of ordered pairs; arcs are kept sorted.
class Digraph {
public:
    Digraph() = default;
    static Digraph from_arcs(int n, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;

    // No loops and no pair {(u,v),(v,u)}.
    bool is_asymmetric() const;
    std::optional<int> out_valence() const; // uniform out-valence or nullopt
    bool is_connected() const;              // weakly
    bool is_strongly_connected() const;
    Graph underlying_graph() const;

    bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

// --- constructors for the test families -----------------------------------

// Vertex i adjacent to i +- s (mod n) for s in offsets; offsets must be
// closed under negation mod n.
Graph circulant(int n, const std::set<int>& offsets);
Graph complete_graph(int n);
// Paley graph on a prime q = 1 (mod 4): x ~ y iff x - y is a non-zero square.
Graph paley(int q);
// Vertices V(base) x {0..m-1}; (u,i) ~ (v,j) iff u ~ v in the base graph.
Graph lexicographic_blowup(const Graph& base, int m);

Digraph directed_cycle(int n);
// Arcs (i,x) -> (i+1 mod k, y) for all x, y; vertex (i,x) = i*m + x.
Digraph directed_cycle_blowup(int k, int m);

// --- symmetry --------------------------------------------------------------

// True iff every generator preserves the edge set and the orbit of one arc
// covers all arcs.
bool is_arc_transitive(const Graph& graph, const PermGroup& group);
bool is_arc_transitive(const Digraph& digraph, const PermGroup& group);
bool preserves_graph(const Graph& graph, const Permutation& g);
bool preserves_digraph(const Digraph& digraph, const Permutation& g);

// Orients each edge along the G-orbit of the seed arc. Fails with
// OrbitContainsBothDirections when the orbit covers some edge both ways.
Digraph orient_by_arc_orbit(const Graph& graph, const PermGroup& group,
                            std::pair<int, int> seed_arc);

// Full automorphism group by backtracking; vertex count is capped, as is the
// number of automorphisms visited.
PermGroup tiny_automorphism_group(const Graph& graph, int bound = 16,
                                  std::uint64_t budget = 1'000'000);

} // namespace semireg
