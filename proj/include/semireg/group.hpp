#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "semireg/partition.hpp"
#include "semireg/perm.hpp"

namespace semireg {

// Base and strong generating set built by deterministic Schreier-Sims with
// base points 0,1,2,... (an optional prefix pins the first base points, which
// kernel and lifting computations rely on). Transversals are stored
// explicitly; orbits only ever extend, so sift results stay valid as
// generators are added.
class Bsgs {
public:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;      // strong generators fixing all earlier base points
        std::vector<int> orbit;             // discovery order, orbit[0] == base
        std::vector<int> slot;              // point -> index into trans, -1 outside orbit
        std::vector<Permutation> trans;     // trans[slot[x]] maps base -> x
    };

    Bsgs(int degree, const std::vector<Permutation>& generators,
         const std::vector<int>& base_prefix = {});

    int degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }

    std::uint64_t order() const;
    bool contains(const Permutation& p) const;

    // Strips transversal factors starting at `from_level`; returns the residue
    // and the level at which stripping stopped (levels_.size() on success).
    std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from_level = 0) const;

    // Visits elements in lexicographic order of their image tables. The
    // callback returns false to stop. Returns the number of elements visited.
    std::uint64_t enumerate(std::uint64_t budget,
                            const std::function<bool(const Permutation&)>& visit) const;

    // Generators of the pointwise stabilizer of the first `prefix_len` base
    // points (requires the Bsgs to have been built with that prefix).
    std::vector<Permutation> stabilizer_chain_gens(std::size_t prefix_len) const;

private:
    void extend_orbit(Level& level);
    void add_strong_generator(std::size_t level, const Permutation& g);
    void complete();

    int degree_;
    std::vector<Level> levels_;
    std::vector<char> dirty_;
    std::vector<std::size_t> checked_orbit_;
    std::vector<std::size_t> checked_gens_;
};

// A permutation group given by generators, with a lazily built, internally
// synchronized BSGS cache. Value semantics; copies share the cache.
class PermGroup {
public:
    PermGroup() : PermGroup(0) {}
    explicit PermGroup(int degree) : degree_(degree), cache_(std::make_shared<Cache>()) {}
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const Bsgs& bsgs() const;
    // A fresh BSGS whose base starts with the given points; not cached.
    std::shared_ptr<const Bsgs> bsgs_with_base_prefix(const std::vector<int>& prefix) const;

    std::uint64_t order() const { return bsgs().order(); }
    bool is_trivial() const { return order() == 1; }
    bool contains(const Permutation& p) const;

    std::vector<int> orbit(int point) const;                 // sorted
    Partition orbit_partition() const;
    bool is_transitive() const;
    bool is_abelian() const;
    // True iff no non-identity element fixes a point; equivalently every orbit
    // has length |G|.
    bool is_semiregular() const;

    // Subgroup fixing `point`, generated by the Schreier generators of the
    // orbit of `point`.
    PermGroup stabilizer(int point) const;

    // An element g with point^g = target, or nullopt if target is outside the
    // orbit. Deterministic (breadth-first transversal).
    std::optional<Permutation> transporter(int point, int target) const;

    // Lexicographic element enumeration (identity first). The callback
    // returns false to stop early. Returns the number of elements visited.
    std::uint64_t for_each_element(std::uint64_t budget,
                                   const std::function<bool(const Permutation&)>& visit) const;

    std::vector<Permutation> elements(std::uint64_t budget) const;
    // First non-identity element in enumeration order; the universal witness
    // tie-break. Throws TrivialGroup on the trivial group.
    Permutation first_nonidentity() const;

    bool same_group_as(const PermGroup& other) const;

private:
    struct Cache {
        std::once_flag once;
        std::shared_ptr<const Bsgs> bsgs;
    };

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::shared_ptr<Cache> cache_;
};

// Orbit of `point` under `gens` with a breadth-first transversal:
// transversal[i] maps point to orbit[i].
struct OrbitTransversal {
    std::vector<int> orbit;
    std::vector<Permutation> transversal;
    std::vector<int> slot; // point -> index, -1 outside
};
OrbitTransversal orbit_with_transversal(int degree, const std::vector<Permutation>& gens, int point);

// Grows `start` by the candidates that are not already contained, in order.
PermGroup grow_by(const PermGroup& start, const std::vector<Permutation>& candidates);

} // namespace semireg
