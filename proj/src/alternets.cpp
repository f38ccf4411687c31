#include "semireg/alternets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

struct ArcUnionFind {
    std::vector<int> parent;
    explicit ArcUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b, int at_most) {
    // both sorted; returns true iff |a n b| > at_most
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            if (++count > at_most) return true;
            ++i;
            ++j;
        }
    }
    return false;
}

} // namespace

AlternetPartition alternet_partition(const Digraph& digraph) {
    const auto& arcs = digraph.arcs();
    require(!arcs.empty(), ErrorKind::EmptyDigraph, "alternets need at least one arc");
    const int m = static_cast<int>(arcs.size());

    ArcUnionFind uf(m);
    // Arcs sharing a tail or a head collapse into one class; chaining the
    // first arc of each bucket with the rest realizes the closure.
    std::vector<int> first_out(digraph.vertex_count(), -1), first_in(digraph.vertex_count(), -1);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = arcs[i];
        if (first_out[u] == -1)
            first_out[u] = i;
        else
            uf.unite(first_out[u], i);
        if (first_in[v] == -1)
            first_in[v] = i;
        else
            uf.unite(first_in[v], i);
    }

    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[uf.find(i)].push_back(i);

    AlternetPartition result;
    result.digraph = digraph;
    result.class_of_arc.assign(m, -1);
    for (auto& [root, members] : buckets) {
        int cls = result.class_count();
        std::vector<int> src, snk;
        for (int ai : members) {
            result.class_of_arc[ai] = cls;
            src.push_back(arcs[ai].first);
            snk.push_back(arcs[ai].second);
        }
        result.classes.push_back(std::move(members));
        result.sources.push_back(sorted_unique(std::move(src)));
        result.sinks.push_back(sorted_unique(std::move(snk)));
    }
    return result;
}

bool is_degenerate(const AlternetPartition& partition, int cls) {
    require(cls >= 0 && cls < partition.class_count(), ErrorKind::Precondition,
            "class index out of range");
    return intersects(partition.sources[cls], partition.sinks[cls], 0);
}

bool has_degenerate_class(const AlternetPartition& partition) {
    for (int c = 0; c < partition.class_count(); ++c)
        if (is_degenerate(partition, c)) return true;
    return false;
}

bool is_complete_bipartite(const AlternetPartition& partition, int cls) {
    require(!is_degenerate(partition, cls), ErrorKind::DegenerateAlternet,
            "completeness is only defined for non-degenerate alternets");
    return partition.classes[cls].size() ==
           partition.sources[cls].size() * partition.sinks[cls].size();
}

bool is_loosely_attached(const AlternetPartition& partition) {
    require(!has_degenerate_class(partition), ErrorKind::DegenerateAlternet,
            "loose attachment is only defined without degenerate alternets");
    for (int a = 0; a < partition.class_count(); ++a)
        for (int b = 0; b < partition.class_count(); ++b) {
            if (a == b) continue;
            if (intersects(partition.sinks[a], partition.sources[b], 1)) return false;
        }
    return true;
}

std::pair<Digraph, std::vector<int>> alternet_digraph(const AlternetPartition& partition) {
    require(!has_degenerate_class(partition), ErrorKind::DegenerateAlternet,
            "the digraph of alternets needs non-degenerate alternets");
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < partition.class_count(); ++a)
        for (int b = 0; b < partition.class_count(); ++b) {
            if (a == b) continue;
            if (intersects(partition.sinks[a], partition.sources[b], 0)) arcs.emplace_back(a, b);
        }
    std::vector<int> vertex_class(partition.digraph.vertex_count(), -1);
    const auto& all_arcs = partition.digraph.arcs();
    for (int ai = 0; ai < static_cast<int>(all_arcs.size()); ++ai) {
        int tail = all_arcs[ai].first;
        if (vertex_class[tail] == -1) vertex_class[tail] = partition.class_of_arc[ai];
    }
    return {Digraph::from_arcs(partition.class_count(), std::move(arcs)), vertex_class};
}

AlternetAction induced_group_on_alternets(const PermGroup& group,
                                          const AlternetPartition& partition,
                                          bool assert_faithful) {
    const Digraph& digraph = partition.digraph;
    for (const auto& g : group.generators())
        require(preserves_digraph(digraph, g), ErrorKind::NotAutomorphism,
                "group does not preserve the digraph");

    // The projection must stay valid after this call returns, so it owns a
    // copy of the partition.
    auto project = [part = partition](const Permutation& g) {
        const auto& arcs = part.digraph.arcs();
        auto arc_index = [&arcs](int u, int v) {
            auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(u, v));
            return static_cast<int>(it - arcs.begin());
        };
        std::vector<int> img(part.class_count(), -1);
        for (int c = 0; c < part.class_count(); ++c) {
            int target = -1;
            for (int ai : part.classes[c]) {
                int t = part.class_of_arc[arc_index(g[arcs[ai].first], g[arcs[ai].second])];
                require(target == -1 || t == target, ErrorKind::InvariantViolation,
                        "automorphism does not permute alternet classes");
                target = t;
            }
            img[c] = target;
        }
        return Permutation::from_images(std::move(img));
    };

    std::vector<Permutation> images;
    for (const auto& g : group.generators()) images.push_back(project(g));
    AlternetAction action{PermGroup(partition.class_count(), std::move(images)), project};
    if (assert_faithful)
        require(action.group.order() == group.order(), ErrorKind::InvariantViolation,
                "action on alternets is not faithful");
    return action;
}

Permutation duplicate_class_semiregular(const Digraph& digraph) {
    const int n = digraph.vertex_count();
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v)
        classes[{digraph.in_neighbors(v), digraph.out_neighbors(v)}].push_back(v);

    std::size_t size = classes.begin()->second.size();
    require(size >= 2, ErrorKind::ClassesNotUniform,
            "neighborhood classes are singletons; no duplicate vertices");
    for (const auto& [key, members] : classes)
        require(members.size() == size, ErrorKind::ClassesNotUniform,
                "neighborhood classes have unequal sizes");

    std::vector<int> img(n);
    for (const auto& [key, members] : classes)
        for (std::size_t i = 0; i < members.size(); ++i)
            img[members[i]] = members[(i + 1) % members.size()];
    Permutation witness = Permutation::from_images(std::move(img));

    require(preserves_digraph(digraph, witness), ErrorKind::InvariantViolation,
            "class-cycling permutation is not an automorphism");
    auto common = witness.uniform_cycle_length();
    require(common && *common == static_cast<int>(size), ErrorKind::InvariantViolation,
            "class-cycling permutation is not semiregular of the class size");
    return witness;
}

std::pair<Digraph, PermGroup> derive_orientation(const Graph& graph, const PermGroup& group,
                                                 const QuotientData& data) {
    const Graph& quotient = data.quotient;
    const int m = quotient.vertex_count();
    auto qval = quotient.regular_valency();
    require(qval && *qval == 2 && m >= 3 && quotient.is_connected(), ErrorKind::QuotientNotCycle,
            "quotient is not a cycle on at least three vertices");
    require(!data.intra_orbit_edges, ErrorKind::IntraOrbitEdge,
            "an edge joins two vertices of one orbit");

    // Walk the cycle; 0 points toward its smaller neighbor.
    std::vector<int> cycle{0, std::min(quotient.neighbors(0)[0], quotient.neighbors(0)[1])};
    while (true) {
        int prev = cycle[cycle.size() - 2], cur = cycle.back();
        int next = quotient.neighbors(cur)[0] == prev ? quotient.neighbors(cur)[1]
                                                      : quotient.neighbors(cur)[0];
        if (next == 0) break;
        cycle.push_back(next);
    }
    require(static_cast<int>(cycle.size()) == m, ErrorKind::QuotientNotCycle,
            "quotient is 2-valent but not a single cycle");
    std::vector<int> succ(m, -1);
    for (int i = 0; i < m; ++i) succ[cycle[i]] = cycle[(i + 1) % m];

    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : graph.edges()) {
        int qu = data.orbit_map[u], qv = data.orbit_map[v];
        if (succ[qu] == qv)
            arcs.emplace_back(u, v);
        else if (succ[qv] == qu)
            arcs.emplace_back(v, u);
        else
            fail(ErrorKind::InvariantViolation, "edge joins non-consecutive orbits of the cycle");
    }
    Digraph oriented = Digraph::from_arcs(graph.vertex_count(), std::move(arcs));
    require(oriented.is_asymmetric(), ErrorKind::InvariantViolation,
            "orientation lift is not asymmetric");

    // Orientation sign of each generator: +1 if its induced action maps the
    // oriented cycle to itself, -1 if it reverses it.
    const int n = graph.vertex_count();
    std::vector<Permutation> signed_gens;
    for (const auto& g : group.generators()) {
        Permutation q = data.project(g);
        bool preserves = succ[q[cycle[0]]] == q[succ[cycle[0]]];
        bool reverses = succ[q[succ[cycle[0]]]] == q[cycle[0]];
        require(preserves != reverses, ErrorKind::InvariantViolation,
                "induced action does not act on the quotient cycle");
        std::vector<int> img(n + 2);
        for (int v = 0; v < n; ++v) img[v] = g[v];
        img[n] = preserves ? n : n + 1;
        img[n + 1] = preserves ? n + 1 : n;
        signed_gens.push_back(Permutation::from_images(std::move(img)));
    }
    PermGroup padded(n + 2, signed_gens);
    PermGroup padded_stab = padded.stabilizer(n);
    std::vector<Permutation> plus_gens;
    for (const auto& g : padded_stab.generators()) {
        std::vector<int> img(n);
        for (int v = 0; v < n; ++v) img[v] = g[v];
        Permutation restricted = Permutation::from_images(std::move(img));
        if (!restricted.is_identity()) plus_gens.push_back(std::move(restricted));
    }
    PermGroup orientation_preserving(n, std::move(plus_gens));

    auto outval = oriented.out_valence();
    require(outval && *outval * 2 == graph.regular_valency().value_or(-1),
            ErrorKind::InvariantViolation, "orientation does not split the valency evenly");
    require(is_arc_transitive(oriented, orientation_preserving), ErrorKind::SubgroupHypothesis,
            "orientation-preserving subgroup is not arc-transitive on the oriented digraph");
    return {std::move(oriented), std::move(orientation_preserving)};
}

} // namespace semireg
