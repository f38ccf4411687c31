#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semireg/group.hpp"
#include "semireg/partition.hpp"
#include "semireg/perm.hpp"

namespace semireg {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Smallest normal subgroup of G containing the seeds (closure under
// conjugation by the generators of G).
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds);

// Commutator subgroup [G, G].
PermGroup derived_subgroup(const PermGroup& group);

// G, G', G'', ... down to the first repetition (trivial last entry iff
// solvable).
std::vector<PermGroup> derived_series(const PermGroup& group);
bool is_solvable(const PermGroup& group);

// Elements commuting with every generator. Enumerates the group, so the order
// must stay within the budget.
PermGroup center(const PermGroup& group, std::uint64_t budget = kDefaultBudget);

// An element of exact order p. Tries powers of the generators, short products
// and transversal conjugates first, then falls back to lexicographic
// enumeration; the attempt order is fixed, so the result is deterministic.
Permutation element_of_order_p(const PermGroup& group, std::uint64_t p,
                               std::uint64_t budget = kDefaultBudget);

// A Sylow p-subgroup: greedy ascent over a deterministic pool of p-elements
// (generator powers and their transversal conjugates), then a single
// enumeration pass when the group is small enough. A maximal p-subgroup is
// Sylow, and one full pass reaches maximality because a rejected candidate
// stays rejected as the subgroup grows. Returns the trivial group when p
// does not divide |G|.
PermGroup sylow_subgroup(const PermGroup& group, std::uint64_t p,
                         std::uint64_t budget = kDefaultBudget);

// Every non-trivial normal subgroup is transitive. Checks the normal closure
// of one representative per conjugacy class.
bool is_quasiprimitive(const PermGroup& group, std::uint64_t budget = kDefaultBudget);

// A minimal non-trivial invariant block system (union-find closure seeded
// with each pair {0, x}; smallest resulting block size wins), or nullopt if
// the group is primitive. Requires transitivity.
std::optional<Partition> minimal_blocks(const PermGroup& group);
bool is_primitive(const PermGroup& group);

enum class Degree8Class { Primitive, ImprimitiveTwoThree };

// A transitive group of degree 8 is primitive or a {2,3}-group; anything else
// is an invariant violation.
Degree8Class classify_transitive_degree8(const PermGroup& group);

// Subgroup of elements mapping every block of the partition to itself.
PermGroup kernel_on_partition(const PermGroup& group, const Partition& partition);

// The action of G on the blocks of an invariant partition. Generators of
// `group` and of `group` stay index-aligned so elements can be pulled back.
struct InducedAction {
    PermGroup group;      // degree = number of blocks
    Partition partition;

    // Image of an arbitrary element of the source group on blocks.
    Permutation project(const Permutation& g) const;
};
InducedAction induced_action_on_partition(const PermGroup& group, const Partition& partition);

// The permutation group induced on `domain` by the stabilizer of `fixed`,
// relabeled along the sorted domain.
PermGroup local_restriction(const PermGroup& group, int fixed, const std::vector<int>& domain);

// An elementary abelian minimal normal subgroup of a solvable group: take the
// last non-trivial term of the derived series, its q-torsion for the smallest
// prime q, and spin the resulting module down to an irreducible submodule.
PermGroup minimal_normal_subgroup(const PermGroup& group, std::uint64_t budget = kDefaultBudget);

// Some element of `group` whose induced action on the first `quotient_degree`
// points of the paired group equals `target`. `source_gens` and
// `induced_gens` must be index-aligned generator lists.
Permutation preimage_of_induced(const PermGroup& group,
                                const std::vector<Permutation>& induced_gens,
                                const Permutation& target);

// Orbits of the stabilizer of `point` on the remaining points form one orbit.
bool is_two_transitive(const PermGroup& group);

std::vector<std::uint64_t> prime_factors(std::uint64_t n); // distinct, ascending
bool is_prime(std::uint64_t n);
bool is_power_of_two(std::uint64_t n);
// Returns p if n = p^k for a prime p, else nullopt.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

} // namespace semireg
