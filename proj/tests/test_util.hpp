#pragma once

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semireg/group.hpp"
#include "semireg/perm.hpp"

namespace semireg::testutil {

inline Permutation cyc(const std::string& s, int degree) {
    return Permutation::parse_cycles(s, degree);
}

// Exhaustive closure of a generating set; the independent order oracle.
inline std::set<Permutation> closure(const std::vector<Permutation>& gens, std::size_t cap = 200000) {
    int degree = gens.empty() ? 1 : gens.front().degree();
    std::set<Permutation> all{Permutation(degree)};
    std::vector<Permutation> frontier{Permutation(degree)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                Permutation p = compose(e, g);
                if (all.insert(p).second) {
                    next.push_back(std::move(p));
                    if (all.size() > cap) return all;
                }
            }
        frontier = std::move(next);
    }
    return all;
}

inline Permutation random_perm(std::mt19937_64& rng, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

// Random 2-generated subgroup of the symmetric group, retried until
// transitive.
inline PermGroup random_transitive_group(std::mt19937_64& rng, int degree) {
    while (true) {
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        if (g.is_transitive()) return g;
    }
}

// Uniform random element of a group via its transversal structure.
inline Permutation random_element(std::mt19937_64& rng, const PermGroup& group) {
    Permutation acc(group.degree());
    for (const auto& level : group.bsgs().levels()) {
        const auto& t = level.trans[rng() % level.trans.size()];
        acc = compose(t, acc);
    }
    return acc;
}

} // namespace semireg::testutil
