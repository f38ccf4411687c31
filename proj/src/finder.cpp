#include "semireg/finder.hpp"

#include <algorithm>
#include <numeric>

#include "semireg/actions.hpp"
#include "semireg/alternets.hpp"
#include "semireg/errors.hpp"
#include "semireg/oracle.hpp"

namespace semireg {

std::string Step::to_string() const {
    switch (branch) {
        case Branch::PrimeFilter: return "PrimeFilter(" + std::to_string(param) + ")";
        case Branch::PrimePowerDegree: return "PrimePowerDegree";
        case Branch::AbelianNormal: return "AbelianNormal";
        case Branch::CoprimeLift: return "CoprimeLift";
        case Branch::QuotientRecursion: return "QuotientRecursion";
        case Branch::DigraphRecursion: return "DigraphRecursion(" + std::to_string(param) + ")";
        case Branch::NotLooselyAttached: return "NotLooselyAttached";
        case Branch::QuasiprimitiveOracle: return "QuasiprimitiveOracle";
        case Branch::OracleFallback: return "OracleFallback";
    }
    return "?";
}

Step Step::parse(const std::string& text) {
    auto with_param = [&](const std::string& name,
                          Branch branch) -> std::optional<Step> {
        if (text.rfind(name + "(", 0) == 0 && text.back() == ')') {
            int param = std::stoi(text.substr(name.size() + 1, text.size() - name.size() - 2));
            return Step{branch, param};
        }
        return std::nullopt;
    };
    if (auto s = with_param("PrimeFilter", Branch::PrimeFilter)) return *s;
    if (auto s = with_param("DigraphRecursion", Branch::DigraphRecursion)) return *s;
    if (text == "PrimePowerDegree") return {Branch::PrimePowerDegree};
    if (text == "AbelianNormal") return {Branch::AbelianNormal};
    if (text == "CoprimeLift") return {Branch::CoprimeLift};
    if (text == "QuotientRecursion") return {Branch::QuotientRecursion};
    if (text == "NotLooselyAttached") return {Branch::NotLooselyAttached};
    if (text == "QuasiprimitiveOracle") return {Branch::QuasiprimitiveOracle};
    if (text == "OracleFallback") return {Branch::OracleFallback};
    fail(ErrorKind::Parse, "unknown branch step: " + text);
}

bool Certificate::has_branch(Branch b) const {
    return std::any_of(trace.begin(), trace.end(), [&](const Step& s) { return s.branch == b; });
}

namespace {

Certificate build_certificate(Permutation element, std::vector<Step> trace,
                              const PermGroup& group) {
    Certificate cert;
    cert.element = std::move(element);
    cert.order = cert.element.order();
    auto common = cert.element.uniform_cycle_length();
    require(common.has_value(), ErrorKind::InvariantViolation,
            "found element is not semiregular: cycle type " + cert.element.to_cycle_string());
    cert.cycle_length = *common;
    cert.trace = std::move(trace);
    VerifyResult check = verify_certificate(cert, group);
    require(check.ok, ErrorKind::InvariantViolation,
            "certificate failed independent verification: " + check.reason);
    cert.verified = true;
    return cert;
}

template <typename GraphLike>
Certificate finalize(Certificate cert, const GraphLike& graph, const PermGroup& group) {
    VerifyResult check = verify_certificate(cert, graph, group);
    require(check.ok, ErrorKind::InvariantViolation,
            "certificate failed independent verification: " + check.reason);
    cert.verified = true;
    return cert;
}

std::vector<Step> concat(std::vector<Step> head, const std::vector<Step>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

bool order_is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

Certificate semiregular_prime_power_degree(const PermGroup& group, const FinderOptions& opts) {
    require(group.is_transitive(), ErrorKind::NotTransitive,
            "prime-power-degree search requires a transitive group");
    auto p = prime_power_base(static_cast<std::uint64_t>(group.degree()));
    require(p.has_value(), ErrorKind::DegreeNotPrimePower,
            "degree " + std::to_string(group.degree()) + " is not a prime power");

    PermGroup sylow = sylow_subgroup(group, *p, opts.budget);
    require(sylow.is_transitive(), ErrorKind::InvariantViolation,
            "Sylow " + std::to_string(*p) + "-subgroup of a transitive group of degree " +
                std::to_string(group.degree()) + " is not transitive");
    PermGroup z = center(sylow, opts.budget);
    require(!z.is_trivial(), ErrorKind::InvariantViolation,
            "non-trivial p-group with trivial center");
    Permutation witness = z.first_nonidentity();
    require(witness.is_semiregular(), ErrorKind::InvariantViolation,
            "central element of a transitive p-group is not semiregular: " +
                witness.to_cycle_string());
    return build_certificate(std::move(witness), {{Branch::PrimePowerDegree}}, group);
}

Certificate semiregular_abelian_normal(const PermGroup& group, const PermGroup& normal,
                                       const FinderOptions& opts) {
    require(group.is_transitive(), ErrorKind::NotTransitive, "G must be transitive");
    require(normal.degree() == group.degree(), ErrorKind::DegreeMismatch,
            "N and G act on different domains");
    require(!normal.is_trivial(), ErrorKind::TrivialGroup, "N must be non-trivial");
    require(normal.is_abelian(), ErrorKind::NotAbelian, "N must be abelian");
    for (const auto& n : normal.generators()) {
        require(group.contains(n), ErrorKind::Precondition, "N is not a subgroup of G");
        for (const auto& g : group.generators())
            require(normal.contains(conjugate(n, g)), ErrorKind::NotNormal, "N is not normal in G");
    }
    Partition orbits = normal.orbit_partition();
    require(orbits.size() <= 2, ErrorKind::TooManyOrbits,
            "N has " + std::to_string(orbits.size()) + " orbits; at most two are allowed");

    if (normal.is_semiregular())
        return build_certificate(normal.first_nonidentity(), {{Branch::AbelianNormal}}, group);

    // An abelian transitive group is regular, so a non-semiregular N has
    // exactly two orbits; an element fixing a point fixes its whole orbit.
    require(orbits.size() == 2, ErrorKind::InvariantViolation,
            "abelian transitive normal subgroup must be semiregular");
    int v = -1;
    for (int x = 0; x < group.degree() && v == -1; ++x)
        if (normal.orbit(x).size() < normal.order()) v = x;
    require(v != -1, ErrorKind::InvariantViolation, "no point with non-trivial N-stabilizer");

    Permutation fixer;
    bool found = false;
    normal.for_each_element(opts.budget, [&](const Permutation& x) {
        if (!x.is_identity() && x[v] == v) {
            fixer = x;
            found = true;
            return false;
        }
        return true;
    });
    require(found, ErrorKind::InvariantViolation, "N_v is non-trivial but no fixer was found");

    auto vorbit = normal.orbit(v);
    int u = -1;
    for (int x = 0; x < group.degree() && u == -1; ++x)
        if (!std::binary_search(vorbit.begin(), vorbit.end(), x)) u = x;
    auto g = group.transporter(v, u);
    require(g.has_value(), ErrorKind::InvariantViolation, "transitive group has no transporter");

    Permutation witness = compose(fixer, conjugate(fixer, *g));
    require(!witness.is_identity() && normal.contains(witness) && witness.is_semiregular(),
            ErrorKind::InvariantViolation,
            "n * n^g is not a non-identity semiregular element of N");
    return build_certificate(std::move(witness), {{Branch::AbelianNormal}}, group);
}

Certificate lift_semiregular_coprime(const PermGroup& group, const PermGroup& kernel,
                                     const Permutation& g, const Partition& blocks,
                                     const FinderOptions& opts) {
    (void)opts;
    require(group.contains(g), ErrorKind::Precondition, "g is not an element of G");
    for (const auto& k : kernel.generators()) {
        require(group.contains(k), ErrorKind::Precondition, "K is not a subgroup of G");
        for (const auto& h : group.generators())
            require(kernel.contains(conjugate(k, h)), ErrorKind::NotNormal, "K is not normal in G");
    }
    Partition korbits = kernel.orbit_partition();
    require(korbits.blocks == blocks.blocks, ErrorKind::Precondition,
            "blocks must be the K-orbit partition");

    InducedAction action = induced_action_on_partition(group, blocks);
    require(action.group.order() * kernel.order() == group.order(), ErrorKind::NotFaithful,
            "G/K does not act faithfully on the K-orbits");

    Permutation image = action.project(g);
    require(!image.is_identity() && image.is_semiregular(), ErrorKind::ImageNotSemiregular,
            "the block image of g is not a non-identity semiregular element");
    std::uint64_t m = image.order();
    require(std::gcd(m, kernel.order()) == 1, ErrorKind::NotCoprime,
            "order of the block image is not coprime to |K|");

    Permutation k_elt = g.power(static_cast<long long>(m));
    require(kernel.contains(k_elt), ErrorKind::InvariantViolation,
            "g^|gK| does not land in the kernel");
    Permutation lifted = g.power(static_cast<long long>(k_elt.order()));
    require(lifted.order() == m, ErrorKind::InvariantViolation,
            "lifted element's order differs from the block image's order");
    require(lifted.is_semiregular(), ErrorKind::InvariantViolation,
            "lifted element is not semiregular: " + lifted.to_cycle_string());
    return build_certificate(std::move(lifted), {{Branch::CoprimeLift}}, group);
}

std::optional<Certificate> prime_filter_semiregular(const PermGroup& group,
                                                    const FinderOptions& opts) {
    require(group.is_transitive(), ErrorKind::NotTransitive,
            "the prime filter requires a transitive group");
    std::uint64_t stab_order = group.order() / static_cast<std::uint64_t>(group.degree());
    for (std::uint64_t p : prime_factors(group.order())) {
        if (stab_order % p == 0) continue;
        Permutation x = element_of_order_p(group, p, opts.budget);
        require(x.is_semiregular(), ErrorKind::InvariantViolation,
                "an element of order " + std::to_string(p) +
                    " must be semiregular when p does not divide the stabilizer order");
        return build_certificate(std::move(x),
                                 {{Branch::PrimeFilter, static_cast<int>(p)}}, group);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// 4-valent solvable induction

Certificate find_semiregular_4valent_solvable(const Graph& graph, const PermGroup& group,
                                              std::uint64_t p, const FinderOptions& opts) {
    const int n = graph.vertex_count();
    require(group.degree() == n, ErrorKind::DegreeMismatch, "group degree != vertex count");
    require(graph.is_connected(), ErrorKind::Precondition, "graph must be connected");
    require(graph.regular_valency() == 4, ErrorKind::Precondition, "graph must be 4-valent");
    require(is_prime(p) && p % 2 == 1, ErrorKind::Precondition, "p must be an odd prime");
    require(static_cast<std::uint64_t>(n) % p == 0, ErrorKind::Precondition,
            "p must divide the vertex count");
    require(is_arc_transitive(graph, group), ErrorKind::Precondition,
            "group is not arc-transitive on the graph");
    require(is_solvable(group), ErrorKind::NotSolvable, "group must be solvable");

    std::uint64_t stab_order = group.order() / static_cast<std::uint64_t>(n);
    if (order_is_p_power(stab_order, 2)) {
        // Stabilizers are 2-groups, so no power of an order-p element fixes
        // anything.
        Permutation x = element_of_order_p(group, p, opts.budget);
        require(x.is_semiregular(), ErrorKind::InvariantViolation,
                "order-p element with 2-group stabilizers is not semiregular");
        return finalize(
            build_certificate(std::move(x), {{Branch::PrimeFilter, static_cast<int>(p)}}, group),
            graph, group);
    }

    PermGroup local = local_action(graph, group, 0);
    require(local.is_transitive(), ErrorKind::InvariantViolation,
            "arc-transitive group with intransitive local action");
    require(is_two_transitive(local), ErrorKind::InvariantViolation,
            "transitive degree-4 local action beyond a 2-group must be 2-transitive");

    PermGroup normal = minimal_normal_subgroup(group, opts.budget);
    std::uint64_t q = prime_factors(normal.order()).front();
    Partition orbits = normal.orbit_partition();

    if (orbits.size() <= 2) {
        require(q == p, ErrorKind::InvariantViolation,
                "a minimal normal subgroup with at most two orbits must be a p-group here");
        Certificate cert = semiregular_abelian_normal(group, normal, opts);
        require(cert.order == p, ErrorKind::InvariantViolation,
                "element of an elementary abelian p-group must have order p");
        return finalize(std::move(cert), graph, group);
    }

    QuotientData data = quotient_graph(graph, group, normal);
    require(data.quotient.regular_valency() == 4, ErrorKind::InvariantViolation,
            "quotient by the minimal normal subgroup is not 4-valent");
    require(normal.is_semiregular(), ErrorKind::InvariantViolation,
            "same-valency quotient forces the minimal normal subgroup to be semiregular");
    require(data.kernel.same_group_as(normal), ErrorKind::InvariantViolation,
            "same-valency quotient forces the kernel to equal the minimal normal subgroup");

    if (q == p) {
        Certificate cert =
            build_certificate(normal.first_nonidentity(), {{Branch::AbelianNormal}}, group);
        require(cert.order == p, ErrorKind::InvariantViolation, "expected an order-p element");
        return finalize(std::move(cert), graph, group);
    }

    Certificate sub = find_semiregular_4valent_solvable(data.quotient, data.induced_group, p, opts);
    Permutation pulled = preimage_of_induced(group, data.induced_group.generators(), sub.element);
    Certificate lifted = lift_semiregular_coprime(group, normal, pulled, data.orbits, opts);
    lifted.trace = concat(concat({{Branch::QuotientRecursion}}, sub.trace), lifted.trace);
    require(lifted.order == p, ErrorKind::InvariantViolation, "lifted element order differs from p");
    return finalize(std::move(lifted), graph, group);
}

// ---------------------------------------------------------------------------
// digraph induction

namespace {

Certificate digraph4_impl(const Digraph& digraph, const PermGroup& group,
                          const FinderOptions& opts, int depth, bool strict) {
    const int n = digraph.vertex_count();
    require(group.degree() == n, ErrorKind::DegreeMismatch, "group degree != vertex count");
    require(digraph.out_valence() == 4, ErrorKind::Precondition,
            "digraph must have out-valence 4");
    require(digraph.is_connected(), ErrorKind::Precondition, "digraph must be connected");
    require(digraph.is_asymmetric(), ErrorKind::Precondition, "digraph must be asymmetric");
    require(is_arc_transitive(digraph, group), ErrorKind::Precondition,
            "group is not arc-transitive on the digraph");
    require(digraph.is_strongly_connected(), ErrorKind::InvariantViolation,
            "connected arc-transitive digraph must be strongly connected");
    require(group.is_transitive(), ErrorKind::InvariantViolation,
            "arc-transitive group on a digraph without sources/sinks must be vertex-transitive");

    if (auto filtered = prime_filter_semiregular(group, opts))
        return finalize(std::move(*filtered), digraph, group);

    std::uint64_t stab_order = group.order() / static_cast<std::uint64_t>(n);
    if (order_is_p_power(stab_order, 2)) {
        require(is_power_of_two(static_cast<std::uint64_t>(n)), ErrorKind::InvariantViolation,
                "2-group stabilizers after the prime filter force a 2-power vertex count");
        return finalize(semiregular_prime_power_degree(group, opts), digraph, group);
    }

    PermGroup local = local_action_out(digraph, group, 0);
    require(local.is_transitive() && is_two_transitive(local), ErrorKind::InvariantViolation,
            "local out-action beyond a 2-group must be 2-transitive of degree 4");
    require(is_solvable(group), ErrorKind::InvariantViolation,
            "a {2,3}-group must be solvable");

    PermGroup normal = minimal_normal_subgroup(group, opts.budget);
    if (normal.is_semiregular())
        return finalize(
            build_certificate(normal.first_nonidentity(), {{Branch::AbelianNormal}}, group),
            digraph, group);

    AlternetPartition partition = alternet_partition(digraph);
    for (int c = 0; c < partition.class_count(); ++c) {
        require(!is_degenerate(partition, c), ErrorKind::InvariantViolation,
                "alternets must be non-degenerate when the minimal normal subgroup is not semiregular");
        require(is_complete_bipartite(partition, c), ErrorKind::InvariantViolation,
                "alternets must be complete bipartite here");
    }

    if (!is_loosely_attached(partition)) {
        Permutation witness = duplicate_class_semiregular(digraph);
        require(group.contains(witness), ErrorKind::InvariantViolation,
                "class-cycling automorphism is not in the supplied group");
        return finalize(build_certificate(std::move(witness), {{Branch::NotLooselyAttached}}, group),
                        digraph, group);
    }

    auto [alg, vertex_class] = alternet_digraph(partition);
    require(alg.vertex_count() * 4 == n, ErrorKind::InvariantViolation,
            "the digraph of alternets must shrink the vertex count by a factor of 4");
    require(alg.out_valence() == 4 && alg.is_connected() && alg.is_asymmetric(),
            ErrorKind::InvariantViolation,
            "the digraph of alternets must be a connected asymmetric digraph of out-valence 4");

    AlternetAction action = induced_group_on_alternets(group, partition, /*assert_faithful=*/false);
    bool faithful = action.group.order() == group.order();
    require(faithful, strict ? ErrorKind::InvariantViolation : ErrorKind::SubgroupHypothesis,
            "the action on alternets is not faithful");
    bool alg_arc_transitive = is_arc_transitive(alg, action.group);
    require(alg_arc_transitive,
            strict ? ErrorKind::InvariantViolation : ErrorKind::SubgroupHypothesis,
            "the induced group is not arc-transitive on the digraph of alternets");

    Certificate sub = digraph4_impl(alg, action.group, opts, depth + 1, strict);
    Permutation pulled = preimage_of_induced(group, action.group.generators(), sub.element);
    require(pulled.is_semiregular(), ErrorKind::InvariantViolation,
            "element semiregular on the alternet digraph is not semiregular on the vertices");
    return finalize(
        build_certificate(std::move(pulled),
                          concat({{Branch::DigraphRecursion, depth + 1}}, sub.trace), group),
        digraph, group);
}

} // namespace

Certificate find_semiregular_digraph4(const Digraph& digraph, const PermGroup& group,
                                      const FinderOptions& opts) {
    return digraph4_impl(digraph, group, opts, 0, /*strict=*/true);
}

// ---------------------------------------------------------------------------
// the 8-valent pipeline

namespace {

Certificate oracle_certificate(const PermGroup& group, Branch branch, const FinderOptions& opts) {
    SearchReport report = brute_force_semiregular(group, opts.budget);
    if (report.found)
        return build_certificate(*report.found, {{branch}}, group);
    if (report.exhausted)
        fail(ErrorKind::NoWitness,
             "the supplied group contains no non-identity semiregular element; the guarantee "
             "applies to the full automorphism group");
    fail(ErrorKind::BoundExceeded,
         "oracle budget of " + std::to_string(opts.budget) + " elements exceeded");
}

Certificate eightvalent_pipeline(const Graph& graph, const PermGroup& group,
                                 const FinderOptions& opts) {
    const int n = graph.vertex_count();

    if (is_power_of_two(static_cast<std::uint64_t>(n)))
        return finalize(semiregular_prime_power_degree(group, opts), graph, group);

    PermGroup local = local_action(graph, group, 0);
    require(local.is_transitive(), ErrorKind::InvariantViolation,
            "arc-transitive group with intransitive local action");

    if (is_quasiprimitive(local, opts.budget))
        return finalize(oracle_certificate(group, Branch::QuasiprimitiveOracle, opts), graph, group);

    Degree8Class cls = classify_transitive_degree8(local);
    require(cls == Degree8Class::ImprimitiveTwoThree, ErrorKind::InvariantViolation,
            "local action is primitive but was not quasiprimitive");

    if (!is_solvable(group)) {
        auto filtered = prime_filter_semiregular(group, opts);
        require(filtered.has_value(), ErrorKind::InvariantViolation,
                "a non-solvable group with a {2,3} local action must have a prime missing from "
                "the stabilizers");
        return finalize(std::move(*filtered), graph, group);
    }

    PermGroup normal = minimal_normal_subgroup(group, opts.budget);
    Partition orbits = normal.orbit_partition();
    if (orbits.size() <= 2)
        return finalize(semiregular_abelian_normal(group, normal, opts), graph, group);
    if (normal.is_semiregular())
        return finalize(
            build_certificate(normal.first_nonidentity(), {{Branch::AbelianNormal}}, group),
            graph, group);

    std::uint64_t q = prime_factors(normal.order()).front();
    require(q == 2 && order_is_p_power(normal.order(), 2), ErrorKind::InvariantViolation,
            "a non-semiregular minimal normal subgroup must be an elementary abelian 2-group here");

    QuotientData data = quotient_graph(graph, group, normal);
    auto qval = data.quotient.regular_valency();
    require(qval.has_value(), ErrorKind::InvariantViolation, "quotient graph is irregular");

    if (*qval == 4) {
        require(order_is_p_power(data.kernel.order(), 2), ErrorKind::InvariantViolation,
                "the kernel on orbits must be a 2-group when the quotient is 4-valent");
        std::uint64_t qn = static_cast<std::uint64_t>(data.quotient.vertex_count());
        require(!is_power_of_two(qn), ErrorKind::InvariantViolation,
                "a 2-power quotient size would make the vertex count a 2-power");
        std::uint64_t p = 0;
        for (std::uint64_t f : prime_factors(qn))
            if (f % 2 == 1) { p = f; break; }
        Certificate sub = find_semiregular_4valent_solvable(data.quotient, data.induced_group, p, opts);
        Permutation pulled =
            preimage_of_induced(group, data.induced_group.generators(), sub.element);
        Certificate lifted = lift_semiregular_coprime(group, data.kernel, pulled, data.orbits, opts);
        lifted.trace = concat(concat({{Branch::QuotientRecursion}}, sub.trace), lifted.trace);
        return finalize(std::move(lifted), graph, group);
    }
    if (*qval == 2) {
        auto [oriented, plus] = derive_orientation(graph, group, data);
        Certificate sub = digraph4_impl(oriented, plus, opts, 0, /*strict=*/false);
        return finalize(
            build_certificate(sub.element, concat({{Branch::DigraphRecursion, 0}}, sub.trace),
                              group),
            graph, group);
    }
    fail(ErrorKind::InvariantViolation,
         "quotient valency " + std::to_string(*qval) +
             " contradicts the quotient facts for a non-semiregular minimal normal subgroup");
}

} // namespace

Certificate find_semiregular_8valent(const Graph& graph, const PermGroup& group,
                                     const FinderOptions& opts) {
    require(group.degree() == graph.vertex_count(), ErrorKind::DegreeMismatch,
            "group degree != vertex count");
    require(graph.is_connected(), ErrorKind::Precondition, "graph must be connected");
    auto valency = graph.regular_valency();
    require(valency == 8, ErrorKind::Precondition,
            "valency " + (valency ? std::to_string(*valency) : std::string("(irregular)")) +
                " != 8");
    require(is_arc_transitive(graph, group), ErrorKind::Precondition,
            "group is not arc-transitive on the graph");

    try {
        return eightvalent_pipeline(graph, group, opts);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SubgroupHypothesis) throw;
        // A reduction valid for the full automorphism group failed for the
        // supplied subgroup; fall back to the exhaustive search.
        return finalize(oracle_certificate(group, Branch::OracleFallback, opts), graph, group);
    }
}

} // namespace semireg
