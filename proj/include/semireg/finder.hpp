#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/group.hpp"
#include "semireg/partition.hpp"
#include "semireg/structure.hpp"

namespace semireg {

enum class Branch {
    PrimeFilter,        // element of order p for a prime missing from the vertex stabilizer
    PrimePowerDegree,   // central element of a transitive Sylow subgroup
    AbelianNormal,      // semiregular element inside an abelian normal subgroup
    CoprimeLift,        // lift of a semiregular quotient element of coprime order
    QuotientRecursion,  // descent to the quotient by a minimal normal subgroup
    DigraphRecursion,   // descent into the digraph machinery (parameter: depth)
    NotLooselyAttached, // duplicate-neighborhood class cycling
    QuasiprimitiveOracle,
    OracleFallback,
};

struct Step {
    Branch branch;
    int param = -1; // prime for PrimeFilter, depth for DigraphRecursion

    bool operator==(const Step& other) const {
        return branch == other.branch && param == other.param;
    }
    std::string to_string() const;
    static Step parse(const std::string& text);
};

// A found semiregular element together with the replayable trace of the
// branches that produced it. `verified` is set only after the independent
// re-check.
struct Certificate {
    Permutation element;
    std::uint64_t order = 0;
    int cycle_length = 0;
    std::vector<Step> trace;
    bool verified = false;

    bool has_branch(Branch b) const;
};

struct FinderOptions {
    std::uint64_t budget = kDefaultBudget; // element-enumeration budget for oracle-style subroutines
};

// Central element of a Sylow subgroup for the prime of the degree. Requires a
// transitive group of prime-power degree; the Sylow subgroup's transitivity
// is asserted at runtime.
Certificate semiregular_prime_power_degree(const PermGroup& group, const FinderOptions& opts = {});

// Witness constructor for a transitive group with a non-trivial abelian
// normal subgroup with at most two orbits.
Certificate semiregular_abelian_normal(const PermGroup& group, const PermGroup& normal,
                                       const FinderOptions& opts = {});

// Coprime lifting: K normal with the quotient acting faithfully on the
// K-orbit blocks, g mapping to a semiregular block image of order coprime to
// |K|. Returns an element of that same order, semiregular on points.
Certificate lift_semiregular_coprime(const PermGroup& group, const PermGroup& kernel,
                                     const Permutation& g, const Partition& blocks,
                                     const FinderOptions& opts = {});

// An element of order p for some prime p dividing |G| but not |G_v|; such an
// element is semiregular outright. Returns nullopt when every prime divisor
// of |G| divides |G_v|.
std::optional<Certificate> prime_filter_semiregular(const PermGroup& group,
                                                    const FinderOptions& opts = {});

// Induction for connected 4-valent arc-transitive graphs with solvable group:
// returns a semiregular element of order exactly p (p an odd prime dividing
// the vertex count).
Certificate find_semiregular_4valent_solvable(const Graph& graph, const PermGroup& group,
                                              std::uint64_t p, const FinderOptions& opts = {});

// Induction for connected asymmetric arc-transitive digraphs of out-valence 4.
Certificate find_semiregular_digraph4(const Digraph& digraph, const PermGroup& group,
                                      const FinderOptions& opts = {});

// The full pipeline for connected 8-valent arc-transitive graphs.
Certificate find_semiregular_8valent(const Graph& graph, const PermGroup& group,
                                     const FinderOptions& opts = {});

} // namespace semireg
