#pragma once

#include <string>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/group.hpp"

namespace semireg {

// A named graph together with an arc-transitive subgroup of its automorphism
// group, as produced by the family registry.
struct CorpusPair {
    std::string name;
    Graph graph;
    PermGroup group;
};

// Canonical family names:
//   complete:n            K_n with the full symmetric group
//   paley:q               Paley graph with the affine half group <x+1, s^2 x>
//   blowup:cK,M (or cKxM) C_K[M K_1] with the fiber-wise wreath group
//   circulant:n,o1,o2,... circulant graph with its full automorphism group
//                         (vertex count capped by the automorphism search)
CorpusPair build_family(const std::string& spec);

// Symmetric group as <(0 1), (0 1 ... n-1)>.
PermGroup symmetric_group(int n);
// <x -> x+1, x -> s^2 x> on Z_q, order q(q-1)/2; arc-transitive on paley(q).
PermGroup paley_affine_group(int q);
// Fiber-wise wreath: full symmetric group on each of the k fibers of size m,
// extended by the rotation and reflection of the base cycle.
PermGroup blowup_wreath_group(int k, int m);
// Rotation-only variant acting arc-transitively on the oriented blowup.
PermGroup blowup_rotation_group(int k, int m);

// The 8-valent acceptance corpus.
std::vector<CorpusPair> corpus_8valent();

} // namespace semireg
