#include <doctest.h>

#include <random>

#include "semireg/errors.hpp"
#include "semireg/structure.hpp"
#include "test_util.hpp"

using namespace semireg;
using namespace semireg::testutil;

namespace {

PermGroup s4() { return PermGroup(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)}); }
PermGroup d4() { return PermGroup(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)}); }

// Brute-force center over the element list.
std::vector<Permutation> brute_center(const PermGroup& g) {
    auto all = g.elements(100000);
    std::vector<Permutation> out;
    for (const auto& z : all) {
        bool central = true;
        for (const auto& e : all)
            if (compose(z, e) != compose(e, z)) { central = false; break; }
        if (central && !z.is_identity()) out.push_back(z);
    }
    return out;
}

} // namespace

TEST_CASE("number theory helpers") {
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(1));
    CHECK(is_power_of_two(16));
    CHECK_FALSE(is_power_of_two(24));
    CHECK(prime_power_base(81) == 3); // 81 = 3^4
    CHECK(prime_power_base(17) == 17);
    CHECK_FALSE(prime_power_base(12).has_value());
    CHECK(p_part(48, 2) == 16);
    CHECK(p_part(48, 5) == 1);
}

TEST_CASE("normal closure") {
    CHECK(normal_closure(s4(), {cyc("(1,2)(3,4)", 4)}).order() == 4);
    CHECK(normal_closure(s4(), {cyc("(1,2)", 4)}).order() == 24);
    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    Permutation g3 = cyc("(1,3,5)(2,4,6)", 6);
    PermGroup ncl = normal_closure(c6, {g3});
    CHECK(ncl.order() == 3); // abelian: closure of g is <g>
    CHECK(ncl.contains(g3));
}

TEST_CASE("derived series and solvability") {
    auto series = derived_series(s4());
    REQUIRE(series.size() == 4); // S4 > A4 > V4 > 1
    CHECK(series[1].order() == 12);
    CHECK(series[2].order() == 4);
    CHECK(series[3].order() == 1);
    CHECK(is_solvable(s4()));

    PermGroup a5(5, {cyc("(1,2,3,4,5)", 5), cyc("(1,2,3)", 5)});
    CHECK(a5.order() == 60);
    CHECK_FALSE(is_solvable(a5)); // perfect
    CHECK(derived_series(a5).back().order() == 60);

    PermGroup abelian(6, {cyc("(1,2,3,4,5,6)", 6)});
    CHECK(is_solvable(abelian));
}

TEST_CASE("center") {
    PermGroup zd4 = center(d4());
    CHECK(zd4.order() == 2);
    CHECK(zd4.contains(cyc("(1,3)(2,4)", 4)));

    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(center(c4).order() == 4); // abelian: the whole group
    CHECK(center(s4()).order() == 1);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        PermGroup z = center(g);
        auto brute = brute_center(g);
        CHECK(z.order() == brute.size() + 1);
        for (const auto& b : brute) CHECK(z.contains(b));
    }
}

TEST_CASE("element_of_order_p") {
    Permutation t = element_of_order_p(s4(), 3);
    CHECK(t.order() == 3);
    CHECK(s4().contains(t));
    CHECK_THROWS_AS(element_of_order_p(s4(), 5), Error);

    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    CHECK(element_of_order_p(c6, 2) == cyc("(1,4)(2,5)(3,6)", 6)); // cube of the generator
}

TEST_CASE("sylow subgroups") {
    PermGroup syl2 = sylow_subgroup(s4(), 2);
    CHECK(syl2.order() == 8);
    PermGroup syl3 = sylow_subgroup(s4(), 3);
    CHECK(syl3.order() == 3);
    CHECK(sylow_subgroup(s4(), 5).order() == 1);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int degree = 4 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        for (std::uint64_t p : prime_factors(g.order())) {
            PermGroup s = sylow_subgroup(g, p);
            CHECK(s.order() == p_part(g.order(), p));
            for (const auto& gen : s.generators()) {
                std::uint64_t rest = gen.order();
                while (rest % p == 0) rest /= p;
                CHECK(rest == 1);
            }
            for (const auto& gen : s.generators()) CHECK(g.contains(gen));
        }
    }
}

TEST_CASE("quasiprimitivity") {
    CHECK(is_quasiprimitive(s4()));
    PermGroup c8(8, {cyc("(1,2,3,4,5,6,7,8)", 8)});
    CHECK_FALSE(is_quasiprimitive(c8)); // the order-2 subgroup has small orbits
    PermGroup c5(5, {cyc("(1,2,3,4,5)", 5)});
    CHECK(is_quasiprimitive(c5)); // prime order
    CHECK_THROWS_AS(is_quasiprimitive(PermGroup(4, {cyc("(1,2)", 4)})), Error);

    // brute force over all non-identity elements, no conjugacy shortcut
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int degree = 4 + static_cast<int>(rng() % 4);
        PermGroup g = random_transitive_group(rng, degree);
        if (g.order() > 5000) continue;
        bool brute = true;
        for (const auto& e : g.elements(5000))
            if (!e.is_identity() && !normal_closure(g, {e}).is_transitive()) {
                brute = false;
                break;
            }
        CHECK(is_quasiprimitive(g) == brute);
    }
}

TEST_CASE("minimal blocks") {
    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    auto blocks = minimal_blocks(c4);
    REQUIRE(blocks.has_value());
    CHECK(blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    CHECK_FALSE(minimal_blocks(s4()).has_value());
    CHECK(is_primitive(s4()));

    auto d4_blocks = minimal_blocks(d4());
    REQUIRE(d4_blocks.has_value());
    CHECK(d4_blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    auto c6_blocks = minimal_blocks(c6);
    REQUIRE(c6_blocks.has_value());
    CHECK(c6_blocks->blocks == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});

    CHECK_THROWS_AS(minimal_blocks(PermGroup(4, {cyc("(1,2)", 4)})), Error);
}

TEST_CASE("degree-8 classification") {
    PermGroup c8(8, {cyc("(1,2,3,4,5,6,7,8)", 8)});
    CHECK(classify_transitive_degree8(c8) == Degree8Class::ImprimitiveTwoThree);

    // A8 = <(1,2,3), (2,3,...,8)>
    PermGroup a8(8, {cyc("(1,2,3)", 8), cyc("(2,3,4,5,6,7,8)", 8)});
    CHECK(a8.order() == 20160);
    CHECK(classify_transitive_degree8(a8) == Degree8Class::Primitive);

    PermGroup d8(8, {cyc("(1,2,3,4,5,6,7,8)", 8), cyc("(2,8)(3,7)(4,6)", 8)});
    CHECK(d8.order() == 16);
    CHECK(classify_transitive_degree8(d8) == Degree8Class::ImprimitiveTwoThree);

    CHECK_THROWS_AS(classify_transitive_degree8(s4()), Error);
}

TEST_CASE("kernel and induced action on a partition") {
    Partition p = Partition::from_blocks(4, {{0, 2}, {1, 3}});
    PermGroup kernel = kernel_on_partition(d4(), p);
    CHECK(kernel.order() == 4);

    CHECK(kernel_on_partition(d4(), Partition::singletons(4)).order() == 1);
    CHECK(kernel_on_partition(d4(), Partition::one_block(4)).order() == 8);

    InducedAction induced = induced_action_on_partition(d4(), p);
    CHECK(induced.group.degree() == 2);
    CHECK(induced.group.order() == 2);

    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    Partition p3 = Partition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}});
    InducedAction on3 = induced_action_on_partition(c6, p3);
    CHECK(on3.group.degree() == 3);
    CHECK(on3.group.order() == 3);

    InducedAction iso = induced_action_on_partition(d4(), Partition::singletons(4));
    CHECK(iso.group.order() == d4().order());

    // homomorphism property and order factorization
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation a = random_element(rng, d4()), b = random_element(rng, d4());
        CHECK(induced.project(compose(a, b)) == compose(induced.project(a), induced.project(b)));
    }
    CHECK(kernel.order() * induced.group.order() == d4().order());

    Partition bad = Partition::from_blocks(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(induced_action_on_partition(d4(), bad), Error);
}

TEST_CASE("local restriction") {
    PermGroup l = local_restriction(s4(), 0, {1, 2, 3});
    CHECK(l.degree() == 3);
    CHECK(l.order() == 6);

    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(local_restriction(c4, 0, {1}).order() == 1); // regular: trivial stabilizer

    CHECK(local_restriction(d4(), 0, {1, 3}).order() == 2);
}

TEST_CASE("minimal normal subgroup") {
    PermGroup m = minimal_normal_subgroup(s4());
    CHECK(m.order() == 4);
    CHECK(m.contains(cyc("(1,2)(3,4)", 4)));
    CHECK(m.contains(cyc("(1,3)(2,4)", 4)));

    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    PermGroup mc6 = minimal_normal_subgroup(c6);
    CHECK((mc6.order() == 2 || mc6.order() == 3));

    PermGroup c3(3, {cyc("(1,2,3)", 3)});
    CHECK(minimal_normal_subgroup(c3).order() == 3);

    CHECK_THROWS_AS(minimal_normal_subgroup(PermGroup(3)), Error);
    PermGroup a5(5, {cyc("(1,2,3,4,5)", 5), cyc("(1,2,3)", 5)});
    CHECK_THROWS_AS(minimal_normal_subgroup(a5), Error); // not solvable

    // properties: normal, elementary abelian, minimal (brute via closures)
    std::mt19937_64 rng(57);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 20; ++trial) {
        int degree = 4 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        if (g.is_trivial() || !is_solvable(g) || g.order() > 10000) continue;
        ++checked;
        PermGroup n = minimal_normal_subgroup(g);
        CHECK(n.is_abelian());
        for (const auto& x : n.generators())
            for (const auto& h : g.generators()) CHECK(n.contains(conjugate(x, h)));
        auto primes = prime_factors(n.order());
        REQUIRE(primes.size() == 1);
        for (const auto& e : n.elements(10000))
            if (!e.is_identity()) {
                CHECK(e.order() == primes[0]);
                CHECK(normal_closure(g, {e}).order() == n.order()); // minimality
            }
    }
    CHECK(checked >= 10);
}

TEST_CASE("preimage of an induced element") {
    PermGroup c6(6, {cyc("(1,2,3,4,5,6)", 6)});
    Partition p3 = Partition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}});
    InducedAction on3 = induced_action_on_partition(c6, p3);
    Permutation target = cyc("(1,2,3)", 3);
    Permutation lifted = preimage_of_induced(c6, on3.group.generators(), target);
    CHECK(on3.project(lifted) == target);
    CHECK(c6.contains(lifted));

    CHECK_THROWS_AS(preimage_of_induced(c6, on3.group.generators(), cyc("(1,2)", 3)), Error);
}

TEST_CASE("two-transitivity") {
    CHECK(is_two_transitive(s4()));
    CHECK_FALSE(is_two_transitive(d4()));
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(is_two_transitive(a4));
}
