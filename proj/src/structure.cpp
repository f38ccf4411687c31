#include "semireg/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "semireg/errors.hpp"

namespace semireg {

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

bool is_power_of_two(std::uint64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto factors = prime_factors(n);
    if (factors.size() == 1) return factors[0];
    return std::nullopt;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t part = 1;
    while (n % p == 0) {
        part *= p;
        n /= p;
    }
    return part;
}

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// Full p-part of an element: a power with order p^v_p(|g|).
Permutation element_p_part(const Permutation& g, std::uint64_t p) {
    std::uint64_t ord = g.order();
    std::uint64_t rest = ord;
    while (rest % p == 0) rest /= p;
    return g.power(static_cast<long long>(rest));
}

std::vector<Permutation> transversal_elements(const PermGroup& group) {
    std::vector<Permutation> out;
    for (const auto& level : group.bsgs().levels())
        for (const auto& t : level.trans)
            if (!t.is_identity()) out.push_back(t);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// closures and series

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds) {
    std::vector<Permutation> gens;
    for (const auto& s : seeds) {
        require(group.contains(s), ErrorKind::Precondition, "seed is not a group element");
        if (!s.is_identity() && std::find(gens.begin(), gens.end(), s) == gens.end())
            gens.push_back(s);
    }
    PermGroup closure(group.degree(), gens);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& g : group.generators()) {
            Permutation c = conjugate(gens[i], g);
            if (!closure.contains(c)) {
                gens.push_back(c);
                closure = PermGroup(group.degree(), gens);
            }
        }
    }
    return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
    std::vector<Permutation> seeds;
    const auto& gens = group.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Permutation c = commutator(gens[i], gens[j]);
            if (!c.is_identity()) seeds.push_back(std::move(c));
        }
    return normal_closure(group, seeds);
}

std::vector<PermGroup> derived_series(const PermGroup& group) {
    std::vector<PermGroup> series{group};
    while (true) {
        const PermGroup& last = series.back();
        if (last.is_trivial()) break;
        PermGroup next = derived_subgroup(last);
        if (next.order() == last.order()) break; // perfect
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const PermGroup& group) {
    return derived_series(group).back().is_trivial();
}

PermGroup center(const PermGroup& group, std::uint64_t budget) {
    require(group.order() <= budget, ErrorKind::BoundExceeded,
            "center: group order exceeds enumeration budget");
    std::vector<Permutation> central;
    group.for_each_element(budget, [&](const Permutation& z) {
        for (const auto& g : group.generators())
            if (compose(z, g) != compose(g, z)) return true;
        if (!z.is_identity()) central.push_back(z);
        return true;
    });
    return grow_by(PermGroup(group.degree()), central);
}

// ---------------------------------------------------------------------------
// p-elements and Sylow subgroups

namespace {

std::vector<Permutation> p_element_pool(const PermGroup& group, std::uint64_t p) {
    std::vector<Permutation> raw = group.generators();
    const auto& gens = group.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j) raw.push_back(compose(gens[i], gens[j]));
    auto trans = transversal_elements(group);
    raw.insert(raw.end(), trans.begin(), trans.end());
    for (const auto& g : gens)
        for (const auto& t : trans) {
            raw.push_back(compose(g, t));
            if (raw.size() > 3000) break;
        }

    std::vector<Permutation> pool;
    for (const auto& c : raw) {
        if (c.order() % p != 0) continue;
        Permutation x = element_p_part(c, p);
        if (!x.is_identity() && std::find(pool.begin(), pool.end(), x) == pool.end())
            pool.push_back(std::move(x));
    }
    return pool;
}

} // namespace

Permutation element_of_order_p(const PermGroup& group, std::uint64_t p, std::uint64_t budget) {
    require(group.order() % p == 0, ErrorKind::NoSuchElement,
            "no element of order " + std::to_string(p) + ": it does not divide the group order");
    for (const auto& x : p_element_pool(group, p)) {
        std::uint64_t ord = x.order(); // a power of p
        return x.power(static_cast<long long>(ord / p));
    }
    // Lexicographic fallback; an element of order divisible by p exists.
    Permutation result;
    bool found = false;
    std::uint64_t visited = group.for_each_element(budget, [&](const Permutation& e) {
        std::uint64_t ord = e.order();
        if (ord % p != 0) return true;
        result = e.power(static_cast<long long>(ord / p)); // exact order p
        found = true;
        return false;
    });
    if (found) return result;
    require(visited < group.order(), ErrorKind::InvariantViolation,
            "exhausted the group without an element of order divisible by " + std::to_string(p));
    fail(ErrorKind::BoundExceeded, "element_of_order_p: enumeration budget exceeded");
}

PermGroup sylow_subgroup(const PermGroup& group, std::uint64_t p, std::uint64_t budget) {
    require(is_prime(p), ErrorKind::Precondition, "sylow_subgroup: p must be prime");
    const std::uint64_t target = p_part(group.order(), p);
    PermGroup sub(group.degree());
    if (target == 1) return sub;

    auto try_extend = [&](const Permutation& x) {
        if (x.is_identity() || sub.contains(x)) return false;
        auto gens = sub.generators();
        gens.push_back(x);
        PermGroup bigger(group.degree(), gens);
        if (!is_p_power(bigger.order(), p)) return false;
        sub = std::move(bigger);
        return true;
    };

    // Greedy ascent over a deterministic pool, enriched with conjugates of the
    // current generators by transversal elements until it stalls.
    auto pool = p_element_pool(group, p);
    auto trans = transversal_elements(group);
    bool grew = true;
    while (grew && sub.order() < target) {
        grew = false;
        for (const auto& x : pool) {
            if (sub.order() >= target) break;
            if (try_extend(x)) grew = true;
        }
        if (sub.order() >= target) break;
        for (const auto& t : trans) {
            if (sub.order() >= target) break;
            // snapshot: try_extend replaces `sub`
            const std::vector<Permutation> current = sub.generators();
            for (const auto& s : current)
                if (try_extend(conjugate(s, t))) grew = true;
        }
    }
    if (sub.order() == target) return sub;

    // Single enumeration pass. Once a candidate fails to extend, it keeps
    // failing as the subgroup grows, so one pass reaches a maximal p-subgroup,
    // which is Sylow.
    require(group.order() <= budget, ErrorKind::BoundExceeded,
            "sylow_subgroup: ascent stalled and the group exceeds the enumeration budget");
    group.for_each_element(budget, [&](const Permutation& e) {
        if (sub.order() >= target) return false;
        std::uint64_t ord = e.order();
        if (ord % p != 0) return true;
        Permutation x = element_p_part(e, p);
        if (x.is_identity() || sub.contains(x)) return true;
        // Cheap necessary conditions before building a BSGS.
        for (const auto& g : sub.generators()) {
            if (!is_p_power(compose(x, g).order(), p)) return true;
            if (!is_p_power(commutator(x, g).order(), p)) return true;
        }
        try_extend(x);
        return true;
    });
    require(sub.order() == target, ErrorKind::InvariantViolation,
            "sylow_subgroup: maximal p-subgroup has order " + std::to_string(sub.order()) +
                ", expected " + std::to_string(target));
    return sub;
}

// ---------------------------------------------------------------------------
// quasiprimitivity

bool is_quasiprimitive(const PermGroup& group, std::uint64_t budget) {
    require(group.is_transitive(), ErrorKind::NotTransitive,
            "is_quasiprimitive requires a transitive group");
    require(group.order() <= budget, ErrorKind::BoundExceeded,
            "is_quasiprimitive: group order exceeds enumeration budget");

    std::vector<Permutation> elements = group.elements(budget);
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

    std::vector<char> visited(elements.size(), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (visited[i] || elements[i].is_identity()) continue;
        // Mark the whole conjugacy class; its normal closure is shared.
        std::vector<std::size_t> queue{i};
        visited[i] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const auto& g : group.generators()) {
                Permutation c = conjugate(elements[queue[qi]], g);
                std::size_t ci = index.at(c);
                if (!visited[ci]) {
                    visited[ci] = 1;
                    queue.push_back(ci);
                }
            }
        }
        if (!normal_closure(group, {elements[i]}).is_transitive()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// block systems

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

// Finest invariant partition in which `a` and `b` share a block.
Partition block_closure(const PermGroup& group, int a, int b) {
    const int n = group.degree();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> queue;
    uf.unite(a, b);
    queue.emplace_back(a, b);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [x, y] = queue[qi];
        for (const auto& g : group.generators()) {
            int gx = g[x], gy = g[y];
            if (uf.unite(gx, gy)) queue.emplace_back(gx, gy);
        }
    }
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, members] : classes) blocks.push_back(std::move(members));
    return Partition::from_blocks(n, std::move(blocks));
}

} // namespace

std::optional<Partition> minimal_blocks(const PermGroup& group) {
    require(group.is_transitive(), ErrorKind::NotTransitive, "minimal_blocks requires transitivity");
    const int n = group.degree();
    std::optional<Partition> best;
    for (int x = 1; x < n; ++x) {
        Partition candidate = block_closure(group, 0, x);
        if (candidate.size() == 1) continue; // collapsed to a single block
        if (!best || candidate.blocks[0].size() < best->blocks[0].size()) best = candidate;
    }
    return best;
}

bool is_primitive(const PermGroup& group) { return !minimal_blocks(group).has_value(); }

Degree8Class classify_transitive_degree8(const PermGroup& group) {
    require(group.degree() == 8, ErrorKind::WrongDegree, "classification requires degree 8");
    require(group.is_transitive(), ErrorKind::NotTransitive, "classification requires transitivity");
    if (is_primitive(group)) return Degree8Class::Primitive;
    std::uint64_t rest = group.order();
    while (rest % 2 == 0) rest /= 2;
    while (rest % 3 == 0) rest /= 3;
    require(rest == 1, ErrorKind::InvariantViolation,
            "imprimitive transitive group of degree 8 with order " + std::to_string(group.order()) +
                " is not a {2,3}-group");
    return Degree8Class::ImprimitiveTwoThree;
}

// ---------------------------------------------------------------------------
// partition actions

namespace {

std::vector<Permutation> paired_generators(const PermGroup& group,
                                           const std::vector<Permutation>& induced_gens,
                                           int induced_degree) {
    const int n = group.degree();
    std::vector<Permutation> ext;
    ext.reserve(group.generators().size());
    for (std::size_t i = 0; i < group.generators().size(); ++i) {
        std::vector<int> img(induced_degree + n);
        for (int b = 0; b < induced_degree; ++b) img[b] = induced_gens[i][b];
        for (int v = 0; v < n; ++v) img[induced_degree + v] = induced_degree + group.generators()[i][v];
        ext.push_back(Permutation::from_images(std::move(img)));
    }
    return ext;
}

} // namespace

Permutation InducedAction::project(const Permutation& g) const {
    std::vector<int> img(partition.size());
    for (int b = 0; b < partition.size(); ++b) {
        int target = partition.block_of[g[partition.blocks[b][0]]];
        for (int x : partition.blocks[b])
            require(partition.block_of[g[x]] == target, ErrorKind::NotInvariant,
                    "element does not permute the blocks of the partition");
        img[b] = target;
    }
    return Permutation::from_images(std::move(img));
}

InducedAction induced_action_on_partition(const PermGroup& group, const Partition& partition) {
    require(partition.degree == group.degree(), ErrorKind::DegreeMismatch,
            "partition degree does not match group degree");
    require(is_invariant_partition(partition, group), ErrorKind::NotInvariant,
            "partition is not invariant under the group");
    InducedAction action{PermGroup(partition.size()), partition};
    std::vector<Permutation> images;
    for (const auto& g : group.generators()) images.push_back(action.project(g));
    action.group = PermGroup(partition.size(), std::move(images));
    return action;
}

PermGroup kernel_on_partition(const PermGroup& group, const Partition& partition) {
    InducedAction action = induced_action_on_partition(group, partition);
    const int m = partition.size();
    const int n = group.degree();
    std::vector<Permutation> induced_gens;
    for (const auto& g : group.generators()) induced_gens.push_back(action.project(g));
    auto ext = paired_generators(group, induced_gens, m);

    std::vector<int> prefix(m);
    std::iota(prefix.begin(), prefix.end(), 0);
    Bsgs paired(m + n, ext, prefix);
    std::vector<Permutation> kernel_gens;
    for (const auto& g : paired.stabilizer_chain_gens(static_cast<std::size_t>(m))) {
        std::vector<int> img(n);
        for (int v = 0; v < n; ++v) img[v] = g[m + v] - m;
        Permutation k = Permutation::from_images(std::move(img));
        if (!k.is_identity()) kernel_gens.push_back(std::move(k));
    }
    PermGroup kernel(n, std::move(kernel_gens));
    require(kernel.order() * action.group.order() == group.order(), ErrorKind::InvariantViolation,
            "kernel and induced action orders do not multiply to the group order");
    return kernel;
}

PermGroup local_restriction(const PermGroup& group, int fixed, const std::vector<int>& domain) {
    require(fixed >= 0 && fixed < group.degree(), ErrorKind::Precondition, "point out of range");
    std::vector<int> dom = domain;
    std::sort(dom.begin(), dom.end());
    require(std::adjacent_find(dom.begin(), dom.end()) == dom.end(), ErrorKind::Precondition,
            "domain has repeated points");
    std::vector<int> pos(group.degree(), -1);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        require(dom[i] >= 0 && dom[i] < group.degree(), ErrorKind::Precondition,
                "domain point out of range");
        pos[dom[i]] = static_cast<int>(i);
    }

    PermGroup stab = group.stabilizer(fixed);
    std::vector<Permutation> restricted;
    for (const auto& g : stab.generators()) {
        std::vector<int> img(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i) {
            int y = g[dom[i]];
            require(pos[y] != -1, ErrorKind::NotInvariant,
                    "domain is not invariant under the point stabilizer");
            img[i] = pos[y];
        }
        Permutation r = Permutation::from_images(std::move(img));
        if (!r.is_identity() && std::find(restricted.begin(), restricted.end(), r) == restricted.end())
            restricted.push_back(std::move(r));
    }
    return PermGroup(static_cast<int>(dom.size()), std::move(restricted));
}

// ---------------------------------------------------------------------------
// minimal normal subgroup via module spinning

namespace {

// Dense vectors over F_q with row-reduction; dimensions here are tiny.
struct ModSpace {
    int q;
    int dim;

    std::vector<int> reduce(std::vector<int> v, const std::vector<std::vector<int>>& echelon,
                            const std::vector<int>& pivots) const {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            int c = v[pivots[r]] % q;
            if (c != 0) {
                // v -= c * row (row has pivot coefficient 1)
                for (int i = 0; i < dim; ++i) v[i] = ((v[i] - c * echelon[r][i]) % q + q) % q;
            }
        }
        return v;
    }

    bool insert(std::vector<int> v, std::vector<std::vector<int>>& echelon,
                std::vector<int>& pivots) const {
        v = reduce(std::move(v), echelon, pivots);
        int pivot = -1;
        for (int i = 0; i < dim; ++i)
            if (v[i] % q != 0) { pivot = i; break; }
        if (pivot == -1) return false;
        // normalize pivot coefficient to 1
        int inv = 1;
        for (int c = 1; c < q; ++c)
            if (c * v[pivot] % q == 1) { inv = c; break; }
        for (int i = 0; i < dim; ++i) v[i] = v[i] * inv % q;
        echelon.push_back(std::move(v));
        pivots.push_back(pivot);
        return true;
    }

    std::vector<int> apply(const std::vector<std::vector<int>>& matrix,
                           const std::vector<int>& v) const {
        std::vector<int> w(dim, 0);
        for (int r = 0; r < dim; ++r) {
            long long acc = 0;
            for (int c = 0; c < dim; ++c) acc += static_cast<long long>(matrix[r][c]) * v[c];
            w[r] = static_cast<int>(acc % q);
        }
        return w;
    }
};

// Smallest submodule containing v, as an echelon basis.
std::pair<std::vector<std::vector<int>>, std::vector<int>> spin_vector(
    const ModSpace& space, const std::vector<std::vector<std::vector<int>>>& matrices,
    const std::vector<int>& v) {
    std::vector<std::vector<int>> echelon;
    std::vector<int> pivots;
    std::vector<std::vector<int>> queue;
    if (space.insert(v, echelon, pivots)) queue.push_back(v);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& m : matrices) {
            auto w = space.apply(m, queue[qi]);
            if (space.insert(w, echelon, pivots)) queue.push_back(std::move(w));
        }
    }
    return {echelon, pivots};
}

// Basis (in ambient coordinates) of an irreducible submodule of the module
// spanned by `basis`. Spins every non-zero vector of the current candidate;
// the first proper invariant subspace found restarts the search inside it.
std::vector<std::vector<int>> irreducible_submodule(
    const ModSpace& space, const std::vector<std::vector<std::vector<int>>>& matrices,
    std::vector<std::vector<int>> basis) {
    while (true) {
        const int k = static_cast<int>(basis.size());
        std::uint64_t total = 1;
        for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(space.q);
        bool found_proper = false;
        for (std::uint64_t code = 1; code < total && !found_proper; ++code) {
            // coefficient tuple for this candidate vector
            std::vector<int> v(space.dim, 0);
            std::uint64_t c = code;
            for (int i = 0; i < k; ++i) {
                int coeff = static_cast<int>(c % space.q);
                c /= space.q;
                if (coeff != 0)
                    for (int j = 0; j < space.dim; ++j)
                        v[j] = (v[j] + coeff * basis[i][j]) % space.q;
            }
            auto [echelon, pivots] = spin_vector(space, matrices, v);
            if (static_cast<int>(echelon.size()) < k) {
                basis = std::move(echelon);
                found_proper = true;
            }
        }
        if (!found_proper) return basis;
    }
}

} // namespace

PermGroup minimal_normal_subgroup(const PermGroup& group, std::uint64_t budget) {
    require(!group.is_trivial(), ErrorKind::TrivialGroup,
            "minimal_normal_subgroup requires a non-trivial group");
    auto series = derived_series(group);
    require(series.back().is_trivial(), ErrorKind::NotSolvable,
            "minimal_normal_subgroup requires a solvable group");
    const PermGroup& abelian = series[series.size() - 2];

    std::uint64_t q = prime_factors(abelian.order()).front();
    require(abelian.order() <= budget, ErrorKind::BoundExceeded,
            "minimal_normal_subgroup: abelian layer exceeds enumeration budget");

    // q-torsion of the abelian layer, in element enumeration order.
    std::vector<Permutation> torsion;
    abelian.for_each_element(budget, [&](const Permutation& x) {
        if (!x.is_identity() && x.power(static_cast<long long>(q)).is_identity())
            torsion.push_back(x);
        return true;
    });
    require(!torsion.empty(), ErrorKind::InvariantViolation,
            "abelian layer has no q-torsion for its smallest prime divisor");

    // Coordinate basis of the torsion subgroup, with a span table for
    // decomposing conjugates.
    std::vector<Permutation> basis_elems;
    std::unordered_map<Permutation, std::vector<int>, PermutationHash> coords;
    coords.emplace(Permutation(group.degree()), std::vector<int>{});
    for (const auto& x : torsion) {
        if (coords.count(x)) continue;
        // new independent basis vector; extend the span table
        std::vector<std::pair<Permutation, std::vector<int>>> snapshot(coords.begin(), coords.end());
        require(snapshot.size() * q <= budget, ErrorKind::BoundExceeded,
                "minimal_normal_subgroup: torsion subgroup exceeds enumeration budget");
        int new_index = static_cast<int>(basis_elems.size());
        basis_elems.push_back(x);
        for (auto& [elem, cvec] : coords) cvec.push_back(0);
        for (auto& [elem, cvec] : snapshot) {
            Permutation acc = elem;
            for (int j = 1; j < static_cast<int>(q); ++j) {
                acc = compose(acc, x);
                auto c = cvec;
                c.resize(new_index + 1, 0);
                c[new_index] = j;
                coords.emplace(acc, std::move(c));
            }
        }
    }
    const int dim = static_cast<int>(basis_elems.size());
    for (auto& [elem, cvec] : coords) cvec.resize(dim, 0);

    ModSpace space{static_cast<int>(q), dim};
    std::vector<std::vector<std::vector<int>>> matrices;
    for (const auto& g : group.generators()) {
        std::vector<std::vector<int>> m(dim, std::vector<int>(dim, 0));
        for (int i = 0; i < dim; ++i) {
            Permutation image = conjugate(basis_elems[i], g);
            auto it = coords.find(image);
            require(it != coords.end(), ErrorKind::InvariantViolation,
                    "conjugation does not preserve the torsion subgroup");
            for (int r = 0; r < dim; ++r) m[r][i] = it->second[r];
        }
        matrices.push_back(std::move(m));
    }

    std::vector<std::vector<int>> full(dim, std::vector<int>(dim, 0));
    for (int i = 0; i < dim; ++i) full[i][i] = 1;
    auto sub_basis = irreducible_submodule(space, matrices, full);

    std::vector<Permutation> gens;
    for (const auto& v : sub_basis) {
        Permutation elem(group.degree());
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < v[i]; ++j) elem = compose(elem, basis_elems[i]);
        gens.push_back(std::move(elem));
    }
    PermGroup minimal(group.degree(), gens);
    for (const auto& ng : minimal.generators())
        for (const auto& g : group.generators())
            require(minimal.contains(conjugate(ng, g)), ErrorKind::InvariantViolation,
                    "spun submodule is not normal in the group");
    return minimal;
}

// ---------------------------------------------------------------------------
// lifting through an induced action

Permutation preimage_of_induced(const PermGroup& group,
                                const std::vector<Permutation>& induced_gens,
                                const Permutation& target) {
    require(induced_gens.size() == group.generators().size(), ErrorKind::Precondition,
            "induced generators must align with the group generators");
    const int m = target.degree();
    const int n = group.degree();
    for (const auto& g : induced_gens)
        require(g.degree() == m, ErrorKind::DegreeMismatch,
                "induced generator degree does not match the target degree");
    auto ext = paired_generators(group, induced_gens, m);
    std::vector<int> prefix(m);
    std::iota(prefix.begin(), prefix.end(), 0);
    Bsgs paired(m + n, ext, prefix);

    Permutation rem = target;
    Permutation acc(m + n);
    for (std::size_t li = 0; li < paired.levels().size(); ++li) {
        const auto& level = paired.levels()[li];
        if (level.base >= m) break;
        int image = rem[level.base];
        if (image == level.base) continue;
        require(level.slot[image] != -1, ErrorKind::NoSuchElement,
                "target is not in the induced group");
        const Permutation& t = level.trans[level.slot[image]];
        std::vector<int> tq(m);
        for (int b = 0; b < m; ++b) tq[b] = t[b];
        rem = compose(rem, Permutation::from_images(std::move(tq)).inverse());
        acc = compose(t, acc);
    }
    require(rem.is_identity(), ErrorKind::NoSuchElement, "target is not in the induced group");

    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = acc[m + v] - m;
    Permutation result = Permutation::from_images(std::move(img));
    for (int b = 0; b < m; ++b)
        require(acc[b] == target[b], ErrorKind::InvariantViolation,
                "paired lift does not project onto the target");
    require(group.contains(result), ErrorKind::InvariantViolation,
            "paired lift left the source group");
    return result;
}

bool is_two_transitive(const PermGroup& group) {
    if (group.degree() <= 1) return true;
    if (!group.is_transitive()) return false;
    return group.stabilizer(0).orbit(1).size() == static_cast<std::size_t>(group.degree() - 1);
}

} // namespace semireg
