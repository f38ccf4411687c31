#include "semireg/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "semireg/errors.hpp"
#include "semireg/structure.hpp"

namespace semireg {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    require(n >= 0, ErrorKind::Precondition, "negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, ErrorKind::Precondition,
                "edge endpoint out of range");
        require(u != v, ErrorKind::Precondition, "loops are not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        require(std::adjacent_find(list.begin(), list.end()) == list.end(),
                ErrorKind::Precondition, "multi-edges are not allowed");
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<int> Graph::regular_valency() const {
    if (vertex_count() == 0) return 0;
    int val = degree_of(0);
    for (int v = 1; v < vertex_count(); ++v)
        if (degree_of(v) != val) return std::nullopt;
    return val;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == vertex_count();
}

Digraph Digraph::from_arcs(int n, std::vector<std::pair<int, int>> arcs) {
    require(n >= 0, ErrorKind::Precondition, "negative vertex count");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    Digraph d;
    d.n_ = n;
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (auto [u, v] : arcs) {
        require(u >= 0 && u < n && v >= 0 && v < n, ErrorKind::Precondition,
                "arc endpoint out of range");
        d.out_[u].push_back(v);
        d.in_[v].push_back(u);
    }
    d.arcs_ = std::move(arcs);
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

bool Digraph::is_asymmetric() const {
    for (auto [u, v] : arcs_) {
        if (u == v) return false;
        if (has_arc(v, u)) return false;
    }
    return true;
}

std::optional<int> Digraph::out_valence() const {
    if (n_ == 0) return 0;
    int val = static_cast<int>(out_[0].size());
    for (int v = 1; v < n_; ++v)
        if (static_cast<int>(out_[v].size()) != val) return std::nullopt;
    return val;
}

bool Digraph::is_connected() const { return underlying_graph().is_connected(); }

bool Digraph::is_strongly_connected() const {
    if (n_ == 0) return true;
    auto reach = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    };
    return reach(out_) && reach(in_);
}

Graph Digraph::underlying_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : arcs_) {
        if (u == v) continue;
        if (u > v && has_arc(v, u)) continue; // counted once
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(n_, edges);
}

// ---------------------------------------------------------------------------
// families

Graph circulant(int n, const std::set<int>& offsets) {
    require(n >= 1, ErrorKind::Precondition, "circulant needs at least one vertex");
    for (int s : offsets) {
        require(s >= 1 && s <= n - 1, ErrorKind::Precondition,
                "circulant offsets must lie in 1..n-1");
        require(offsets.count((n - s) % n) == 1, ErrorKind::Precondition,
                "circulant offsets must be closed under negation mod n");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int s : offsets) {
            int j = (i + s) % n;
            if (i < j) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph paley(int q) {
    require(is_prime(static_cast<std::uint64_t>(q)) && q % 4 == 1, ErrorKind::Precondition,
            "paley requires a prime q with q = 1 (mod 4)");
    std::set<int> squares;
    for (int x = 1; x < q; ++x) squares.insert(static_cast<int>(1LL * x * x % q));
    return circulant(q, squares);
}

Graph lexicographic_blowup(const Graph& base, int m) {
    require(m >= 1, ErrorKind::Precondition, "blowup multiplicity must be at least 1");
    const int n = base.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : base.edges())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) edges.emplace_back(u * m + i, v * m + j);
    return Graph::from_edges(n * m, edges);
}

Digraph directed_cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph::from_arcs(n, std::move(arcs));
}

Digraph directed_cycle_blowup(int k, int m) {
    require(k >= 2 && m >= 1, ErrorKind::Precondition, "directed blowup needs k >= 2, m >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) arcs.emplace_back(i * m + x, ((i + 1) % k) * m + y);
    return Digraph::from_arcs(k * m, std::move(arcs));
}

// ---------------------------------------------------------------------------
// symmetry

bool preserves_graph(const Graph& graph, const Permutation& g) {
    if (g.degree() != graph.vertex_count()) return false;
    for (int u = 0; u < graph.vertex_count(); ++u)
        for (int v : graph.neighbors(u))
            if (u < v && !graph.has_edge(g[u], g[v])) return false;
    return true;
}

bool preserves_digraph(const Digraph& digraph, const Permutation& g) {
    if (g.degree() != digraph.vertex_count()) return false;
    for (auto [u, v] : digraph.arcs())
        if (!digraph.has_arc(g[u], g[v])) return false;
    return true;
}

namespace {

// Orbit of a seed arc under the generators, as a set of ordered pairs.
std::vector<std::pair<int, int>> arc_orbit(const std::vector<Permutation>& gens,
                                           std::pair<int, int> seed) {
    std::vector<std::pair<int, int>> orbit{seed};
    std::set<std::pair<int, int>> seen{seed};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& g : gens) {
            std::pair<int, int> image{g[orbit[i].first], g[orbit[i].second]};
            if (seen.insert(image).second) orbit.push_back(image);
        }
    }
    return orbit;
}

} // namespace

bool is_arc_transitive(const Graph& graph, const PermGroup& group) {
    require(group.degree() == graph.vertex_count(), ErrorKind::DegreeMismatch,
            "group degree does not match vertex count");
    if (graph.edge_count() == 0) return true;
    for (const auto& g : group.generators())
        if (!preserves_graph(graph, g)) return false;
    auto first_edge = graph.edges().front();
    return arc_orbit(group.generators(), first_edge).size() == 2 * graph.edge_count();
}

bool is_arc_transitive(const Digraph& digraph, const PermGroup& group) {
    require(group.degree() == digraph.vertex_count(), ErrorKind::DegreeMismatch,
            "group degree does not match vertex count");
    if (digraph.arcs().empty()) return true;
    for (const auto& g : group.generators())
        if (!preserves_digraph(digraph, g)) return false;
    return arc_orbit(group.generators(), digraph.arcs().front()).size() == digraph.arcs().size();
}

Digraph orient_by_arc_orbit(const Graph& graph, const PermGroup& group,
                            std::pair<int, int> seed_arc) {
    require(graph.has_edge(seed_arc.first, seed_arc.second), ErrorKind::Precondition,
            "seed arc is not an edge of the graph");
    for (const auto& g : group.generators())
        require(preserves_graph(graph, g), ErrorKind::NotAutomorphism,
                "group does not preserve the graph");
    auto orbit = arc_orbit(group.generators(), seed_arc);
    std::set<std::pair<int, int>> arcs(orbit.begin(), orbit.end());
    for (auto [u, v] : arcs)
        require(arcs.count({v, u}) == 0, ErrorKind::OrbitContainsBothDirections,
                "arc orbit contains an edge in both directions");
    require(arcs.size() == graph.edge_count(), ErrorKind::Precondition,
            "arc orbit does not cover every edge exactly once");
    return Digraph::from_arcs(graph.vertex_count(),
                              std::vector<std::pair<int, int>>(arcs.begin(), arcs.end()));
}

PermGroup tiny_automorphism_group(const Graph& graph, int bound, std::uint64_t budget) {
    const int n = graph.vertex_count();
    require(n <= bound, ErrorKind::BoundExceeded,
            "graph exceeds the automorphism search bound of " + std::to_string(bound));
    PermGroup aut(n);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::uint64_t visited = 0;

    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            require(++visited <= budget, ErrorKind::BoundExceeded,
                    "automorphism search budget exceeded");
            Permutation a = Permutation::from_images(image);
            if (!aut.contains(a)) {
                auto gens = aut.generators();
                gens.push_back(std::move(a));
                aut = PermGroup(n, std::move(gens));
            }
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || graph.degree_of(w) != graph.degree_of(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (graph.has_edge(u, v) != graph.has_edge(image[u], w)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            rec(v + 1);
            image[v] = -1;
            used[w] = 0;
        }
    };
    rec(0);
    return aut;
}

} // namespace semireg
