#include "semireg/group.hpp"

#include <algorithm>
#include <limits>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    require(b == 0 || a <= std::numeric_limits<std::uint64_t>::max() / b,
            ErrorKind::BoundExceeded, "group order exceeds 64 bits");
    return a * b;
}

constexpr std::size_t kMaxStrongGensPerLevel = 5000;

} // namespace

Bsgs::Bsgs(int degree, const std::vector<Permutation>& generators,
           const std::vector<int>& base_prefix)
    : degree_(degree) {
    // The base is always a permutation of all points: the requested prefix
    // first, then the remaining points in increasing order. Singleton levels
    // cost nothing and make element enumeration lexicographic in image tables.
    std::vector<char> used(degree_, 0);
    auto push_level = [&](int b) {
        require(b >= 0 && b < degree_ && !used[b], ErrorKind::Precondition,
                "invalid or repeated base point");
        used[b] = 1;
        Level level;
        level.base = b;
        level.slot.assign(degree_, -1);
        level.slot[b] = 0;
        level.orbit = {b};
        level.trans = {Permutation(degree_)};
        levels_.push_back(std::move(level));
    };
    for (int b : base_prefix) push_level(b);
    for (int b = 0; b < degree_; ++b)
        if (!used[b]) push_level(b);
    checked_orbit_.assign(levels_.size(), 0);
    checked_gens_.assign(levels_.size(), 0);
    dirty_.assign(levels_.size(), 0);

    for (const auto& g : generators) {
        require(g.degree() == degree_, ErrorKind::DegreeMismatch,
                "generator degree does not match group degree");
        if (!g.is_identity()) add_strong_generator(0, g);
    }
    complete();
}

void Bsgs::extend_orbit(Level& level) {
    for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
        int x = level.orbit[idx];
        for (const auto& g : level.gens) {
            int y = g[x];
            if (level.slot[y] == -1) {
                level.slot[y] = static_cast<int>(level.orbit.size());
                level.orbit.push_back(y);
                level.trans.push_back(compose(level.trans[idx], g));
            }
        }
    }
}

void Bsgs::add_strong_generator(std::size_t from_level, const Permutation& g) {
    std::size_t j = from_level;
    while (j < levels_.size() && g[levels_[j].base] == levels_[j].base) ++j;
    require(j < levels_.size(), ErrorKind::InvariantViolation,
            "non-identity strong generator fixes every remaining base point");
    for (std::size_t i = from_level; i <= j; ++i) {
        auto& gens = levels_[i].gens;
        if (std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
        require(gens.size() < kMaxStrongGensPerLevel, ErrorKind::BoundExceeded,
                "strong generator count exploded");
        gens.push_back(g);
        extend_orbit(levels_[i]);
        dirty_[i] = 1;
    }
}

std::pair<Permutation, std::size_t> Bsgs::sift(const Permutation& p, std::size_t from_level) const {
    Permutation residue = p;
    for (std::size_t i = from_level; i < levels_.size(); ++i) {
        const Level& level = levels_[i];
        int image = residue[level.base];
        if (image == level.base) continue;
        if (level.slot[image] == -1) return {residue, i};
        residue = compose(residue, level.trans[level.slot[image]].inverse());
    }
    return {residue, levels_.size()};
}

void Bsgs::complete() {
    // Orbits and generator lists only ever grow and transversal entries are
    // never rewritten, so a Schreier product that once sifted to the identity
    // keeps doing so. Each level therefore tracks a watermark of already
    // verified (orbit point, generator) pairs and rescans only the rest.
    while (true) {
        int target = -1;
        for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i)
            if (dirty_[i]) { target = i; break; }
        if (target == -1) break;
        dirty_[target] = 0;
        Level& level = levels_[target];
        const std::size_t co = checked_orbit_[target];
        const std::size_t cg = checked_gens_[target];
        const std::size_t no = level.orbit.size();
        const std::size_t ng = level.gens.size();

        auto check_pair = [&](std::size_t idx, std::size_t si) {
            const Permutation& s = level.gens[si];
            int x = level.orbit[idx];
            int y = s[x];
            Permutation h =
                compose(compose(level.trans[idx], s), level.trans[level.slot[y]].inverse());
            if (h.is_identity()) return;
            auto [residue, stop] = sift(h, static_cast<std::size_t>(target) + 1);
            if (!residue.is_identity())
                add_strong_generator(static_cast<std::size_t>(target) + 1, residue);
        };

        for (std::size_t idx = co; idx < no; ++idx)
            for (std::size_t si = 0; si < ng; ++si) check_pair(idx, si);
        for (std::size_t idx = 0; idx < co; ++idx)
            for (std::size_t si = cg; si < ng; ++si) check_pair(idx, si);
        checked_orbit_[target] = no;
        checked_gens_[target] = ng;
        if (level.orbit.size() != no || level.gens.size() != ng)
            dirty_[target] = 1; // grew while scanning deeper levels
    }
}

std::uint64_t Bsgs::order() const {
    std::uint64_t result = 1;
    for (const auto& level : levels_)
        result = checked_mul(result, static_cast<std::uint64_t>(level.orbit.size()));
    return result;
}

bool Bsgs::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, stop] = sift(p);
    return stop == levels_.size() && residue.is_identity();
}

std::uint64_t Bsgs::enumerate(std::uint64_t budget,
                              const std::function<bool(const Permutation&)>& visit) const {
    std::uint64_t visited = 0;
    bool stop = false;

    // Depth-first over coset representatives, ordering each level's candidates
    // by the actual image of the base point under the final element; this
    // yields elements in lexicographic order of their image tables.
    std::function<void(std::size_t, const Permutation&)> rec =
        [&](std::size_t depth, const Permutation& partial) {
            if (stop) return;
            if (depth == levels_.size()) {
                ++visited;
                if (!visit(partial) || visited >= budget) stop = true;
                return;
            }
            const Level& level = levels_[depth];
            if (level.orbit.size() == 1) {
                rec(depth + 1, partial);
                return;
            }
            std::vector<std::pair<int, int>> candidates;
            candidates.reserve(level.orbit.size());
            for (std::size_t idx = 0; idx < level.orbit.size(); ++idx)
                candidates.emplace_back(partial[level.orbit[idx]], static_cast<int>(idx));
            std::sort(candidates.begin(), candidates.end());
            for (auto [image, idx] : candidates) {
                rec(depth + 1, compose(level.trans[idx], partial));
                if (stop) return;
            }
        };
    rec(0, Permutation(degree_));
    return visited;
}

std::vector<Permutation> Bsgs::stabilizer_chain_gens(std::size_t prefix_len) const {
    if (prefix_len >= levels_.size()) return {};
    return levels_[prefix_len].gens;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        require(g.degree() == degree_, ErrorKind::DegreeMismatch,
                "generator degree does not match group degree");
}

const Bsgs& PermGroup::bsgs() const {
    std::call_once(cache_->once, [this] {
        cache_->bsgs = std::make_shared<const Bsgs>(degree_, gens_);
    });
    return *cache_->bsgs;
}

std::shared_ptr<const Bsgs> PermGroup::bsgs_with_base_prefix(const std::vector<int>& prefix) const {
    return std::make_shared<const Bsgs>(degree_, gens_, prefix);
}

bool PermGroup::contains(const Permutation& p) const {
    return p.degree() == degree_ && bsgs().contains(p);
}

OrbitTransversal orbit_with_transversal(int degree, const std::vector<Permutation>& gens, int point) {
    OrbitTransversal result;
    result.slot.assign(degree, -1);
    result.slot[point] = 0;
    result.orbit = {point};
    result.transversal = {Permutation(degree)};
    for (std::size_t idx = 0; idx < result.orbit.size(); ++idx) {
        int x = result.orbit[idx];
        for (const auto& g : gens) {
            int y = g[x];
            if (result.slot[y] == -1) {
                result.slot[y] = static_cast<int>(result.orbit.size());
                result.orbit.push_back(y);
                result.transversal.push_back(compose(result.transversal[idx], g));
            }
        }
    }
    return result;
}

std::vector<int> PermGroup::orbit(int point) const {
    require(point >= 0 && point < degree_, ErrorKind::Precondition, "point out of range");
    auto ot = orbit_with_transversal(degree_, gens_, point);
    std::sort(ot.orbit.begin(), ot.orbit.end());
    return ot.orbit;
}

Partition PermGroup::orbit_partition() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < degree_; ++v) {
        if (seen[v]) continue;
        auto orb = orbit(v);
        for (int x : orb) seen[x] = 1;
        blocks.push_back(std::move(orb));
    }
    return Partition::from_blocks(degree_, std::move(blocks));
}

bool PermGroup::is_transitive() const {
    return degree_ == 0 || static_cast<int>(orbit(0).size()) == degree_;
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
    return true;
}

bool PermGroup::is_semiregular() const {
    std::uint64_t n = order();
    std::vector<char> seen(degree_, 0);
    for (int v = 0; v < degree_; ++v) {
        if (seen[v]) continue;
        auto orb = orbit(v);
        if (orb.size() != n) return false;
        for (int x : orb) seen[x] = 1;
    }
    return true;
}

PermGroup PermGroup::stabilizer(int point) const {
    require(point >= 0 && point < degree_, ErrorKind::Precondition, "point out of range");
    auto ot = orbit_with_transversal(degree_, gens_, point);
    std::vector<Permutation> stab_gens;
    for (std::size_t idx = 0; idx < ot.orbit.size(); ++idx) {
        for (const auto& g : gens_) {
            int y = g[ot.orbit[idx]];
            Permutation schreier =
                compose(compose(ot.transversal[idx], g), ot.transversal[ot.slot[y]].inverse());
            if (schreier.is_identity()) continue;
            if (std::find(stab_gens.begin(), stab_gens.end(), schreier) == stab_gens.end())
                stab_gens.push_back(std::move(schreier));
        }
    }
    return PermGroup(degree_, std::move(stab_gens));
}

std::optional<Permutation> PermGroup::transporter(int point, int target) const {
    require(point >= 0 && point < degree_ && target >= 0 && target < degree_,
            ErrorKind::Precondition, "point out of range");
    auto ot = orbit_with_transversal(degree_, gens_, point);
    if (ot.slot[target] == -1) return std::nullopt;
    return ot.transversal[ot.slot[target]];
}

std::uint64_t PermGroup::for_each_element(std::uint64_t budget,
                                          const std::function<bool(const Permutation&)>& visit) const {
    return bsgs().enumerate(budget, visit);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t budget) const {
    require(order() <= budget, ErrorKind::BoundExceeded,
            "group order " + std::to_string(order()) + " exceeds enumeration budget " +
                std::to_string(budget));
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element(budget, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Permutation PermGroup::first_nonidentity() const {
    require(!is_trivial(), ErrorKind::TrivialGroup, "trivial group has no non-identity element");
    Permutation found(degree_);
    for_each_element(2, [&](const Permutation& p) {
        if (p.is_identity()) return true;
        found = p;
        return false;
    });
    return found;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    if (degree_ != other.degree_ || order() != other.order()) return false;
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

PermGroup grow_by(const PermGroup& start, const std::vector<Permutation>& candidates) {
    PermGroup current = start;
    for (const auto& c : candidates) {
        if (c.is_identity() || current.contains(c)) continue;
        auto gens = current.generators();
        gens.push_back(c);
        current = PermGroup(current.degree(), std::move(gens));
    }
    return current;
}

} // namespace semireg
