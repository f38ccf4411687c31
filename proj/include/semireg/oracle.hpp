#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semireg/graph.hpp"
#include "semireg/group.hpp"

namespace semireg {

struct Certificate;

// Result of an exhaustive semiregular-element scan.
struct SearchReport {
    std::optional<Permutation> found;
    std::uint64_t elements_scanned = 0;
    std::uint64_t budget = 0;
    bool exhausted = false; // scan covered the whole group
};

// First non-identity semiregular element in lexicographic enumeration order.
SearchReport brute_force_semiregular(const PermGroup& group, std::uint64_t budget);

// Every non-identity semiregular element; requires |G| within the budget.
std::vector<Permutation> all_semiregular(const PermGroup& group, std::uint64_t budget);

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

// Independent certificate check: non-identity, uniform cycle type matching
// the stated order and cycle length, membership in the group, and (when a
// graph or digraph is supplied) the automorphism property.
VerifyResult verify_certificate(const Certificate& cert, const PermGroup& group);
VerifyResult verify_certificate(const Certificate& cert, const Graph& graph,
                                const PermGroup& group);
VerifyResult verify_certificate(const Certificate& cert, const Digraph& digraph,
                                const PermGroup& group);

} // namespace semireg
