#include <doctest.h>

#include "semireg/actions.hpp"
#include "semireg/corpus.hpp"
#include "semireg/errors.hpp"
#include "test_util.hpp"

using namespace semireg;
using namespace semireg::testutil;

TEST_CASE("quotient of a cycle by a half-turn") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    PermGroup n(6, {cyc("(1,4)(2,5)(3,6)", 6)});
    QuotientData data = quotient_graph(c6, g, n);
    CHECK(data.quotient == circulant(3, {1, 2}));
    CHECK(data.orbits.blocks == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(data.intra_orbit_edges);
    CHECK(data.kernel.order() * data.induced_group.order() == g.order());
}

TEST_CASE("quotient by the trivial group is the graph itself") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6)});
    QuotientData data = quotient_graph(c6, g, PermGroup(6));
    CHECK(data.quotient == c6);
    CHECK(data.kernel.order() == 1);
}

TEST_CASE("quotient of the tripartite blowup by diagonal fiber rotation") {
    Graph k444 = lexicographic_blowup(circulant(3, {1, 2}), 4);
    // cyclic-fiber blowup group: the diagonal of the fiber rotations is normal
    Permutation f0 = cyc("(1,2,3,4)", 12);
    Permutation rot = cyc("(1,5,9)(2,6,10)(3,7,11)(4,8,12)", 12);
    Permutation refl = cyc("(5,9)(6,10)(7,11)(8,12)", 12);
    PermGroup g(12, {f0, rot, refl});
    // one 4-cycle per fiber, multiplied together: orbits are the fibers
    Permutation diag = cyc("(1,2,3,4)(5,6,7,8)(9,10,11,12)", 12);
    PermGroup n(12, {diag});
    QuotientData data = quotient_graph(k444, g, n);
    CHECK(data.quotient == circulant(3, {1, 2}));
    CHECK(data.quotient.regular_valency() == 2);
}

TEST_CASE("kernel contains N and is normal") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    PermGroup n(6, {cyc("(1,4)(2,5)(3,6)", 6)});
    QuotientData data = quotient_graph(c6, g, n);
    for (const auto& x : n.generators()) CHECK(data.kernel.contains(x));
    for (const auto& k : data.kernel.generators())
        for (const auto& h : g.generators()) CHECK(data.kernel.contains(conjugate(k, h)));
}

TEST_CASE("trivial normal subgroup keeps the valency and is vacuously semiregular") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    QuotientData data = quotient_graph(c6, g, PermGroup(6));
    CHECK(check_same_valency_semiregular(c6, PermGroup(6), data));
}

TEST_CASE("quotient requires normality") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    PermGroup not_normal(6, {cyc("(2,6)(3,5)", 6)});
    CHECK_THROWS_AS(quotient_graph(c6, g, not_normal), Error);
}

TEST_CASE("local actions") {
    PermGroup s9 = symmetric_group(9);
    PermGroup l = local_action(complete_graph(9), s9, 0);
    CHECK(l.degree() == 8);
    CHECK(l.order() == 40320);
    CHECK(is_primitive(l));

    PermGroup affine = paley_affine_group(17);
    PermGroup lp = local_action(paley(17), affine, 0);
    CHECK(lp.degree() == 8);
    CHECK(lp.order() == 8); // regular on the neighbors
    CHECK(lp.is_transitive());

    Graph k444 = lexicographic_blowup(circulant(3, {1, 2}), 4);
    PermGroup wreath = blowup_wreath_group(3, 4);
    PermGroup lb = local_action(k444, wreath, 0);
    CHECK(lb.degree() == 8);
    CHECK(lb.is_transitive());
    auto blocks = minimal_blocks(lb);
    REQUIRE(blocks.has_value()); // the two opposite fibers are blocks
    CHECK(blocks->blocks[0].size() == 4);

    PermGroup rot(6, {cyc("(1,2,3,4,5,6)", 6)});
    CHECK_THROWS_AS(local_action(complete_graph(5), rot, 0), Error); // degree mismatch
}

TEST_CASE("same-valency quotients force a semiregular kernel") {
    Graph c6 = circulant(6, {1, 5});
    PermGroup g(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)});
    PermGroup n(6, {cyc("(1,4)(2,5)(3,6)", 6)});
    QuotientData data = quotient_graph(c6, g, n);
    CHECK(check_same_valency_semiregular(c6, n, data)); // C3 is 2-valent like C6

    Graph k444 = lexicographic_blowup(circulant(3, {1, 2}), 4);
    PermGroup small(12, {cyc("(1,2,3,4)", 12), cyc("(1,5,9)(2,6,10)(3,7,11)(4,8,12)", 12),
                         cyc("(5,9)(6,10)(7,11)(8,12)", 12)});
    Permutation diag = cyc("(1,2,3,4)(5,6,7,8)(9,10,11,12)", 12);
    QuotientData dblow = quotient_graph(k444, small, PermGroup(12, {diag}));
    CHECK_FALSE(check_same_valency_semiregular(k444, PermGroup(12, {diag}), dblow)); // 2 != 8
}

TEST_CASE("quotient valency divides the valency on corpus instances") {
    for (const auto& pair : corpus_8valent()) {
        CAPTURE(pair.name);
        if (!is_solvable(pair.group)) continue;
        PermGroup n = minimal_normal_subgroup(pair.group);
        if (n.orbit_partition().size() < 3) continue;
        QuotientData data = quotient_graph(pair.graph, pair.group, n);
        auto qval = data.quotient.regular_valency();
        REQUIRE(qval.has_value());
        CHECK(8 % *qval == 0);
        CHECK(*qval >= 2);
    }
}
