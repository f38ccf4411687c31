#include <doctest.h>

#include <random>
#include <thread>

#include "semireg/errors.hpp"
#include "semireg/group.hpp"
#include "test_util.hpp"

using namespace semireg;
using namespace semireg::testutil;

TEST_CASE("group order matches exhaustive closure") {
    PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
    CHECK(s4.order() == 24);
    CHECK(s4.order() == closure(s4.generators()).size());

    PermGroup d4(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
    CHECK(d4.order() == 8);
    CHECK(d4.order() == closure(d4.generators()).size());

    CHECK(PermGroup(5).order() == 1);
}

TEST_CASE("order equals closure size on random small groups") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        auto all = closure(g.generators());
        CHECK(g.order() == all.size());
        for (const auto& e : all) CHECK(g.contains(e));
    }

    PermGroup s8(8, {cyc("(1,2)", 8), cyc("(1,2,3,4,5,6,7,8)", 8)});
    CHECK(s8.order() == 40320);
    CHECK(closure(s8.generators()).size() == 40320);
}

TEST_CASE("membership agrees with closure") {
    PermGroup a4(4, {cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)});
    CHECK(a4.order() == 12);
    CHECK(a4.contains(cyc("(1,2)(3,4)", 4)));
    CHECK_FALSE(a4.contains(cyc("(1,2)", 4)));
    auto all = closure(a4.generators());
    int members = 0;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Permutation p = random_perm(rng, 4);
        bool in_closure = all.count(p) > 0;
        CHECK(a4.contains(p) == in_closure);
        members += in_closure;
    }
    CHECK(members > 0);
}

TEST_CASE("orbits") {
    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(c4.orbit(0) == std::vector<int>{0, 1, 2, 3});

    PermGroup swap_only(4, {cyc("(1,2)", 4)});
    CHECK(swap_only.orbit(2) == std::vector<int>{2});

    PermGroup two(4, {cyc("(1,2)", 4), cyc("(3,4)", 4)});
    CHECK(two.orbit(0) == std::vector<int>{0, 1});
    Partition orbits = two.orbit_partition();
    CHECK(orbits.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    CHECK(PermGroup(3).orbit_partition().size() == 3);
    CHECK(PermGroup(5, {cyc("(1,2,3,4,5)", 5)}).orbit_partition().size() == 1);
}

TEST_CASE("stabilizer and orbit-stabilizer") {
    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(c4.stabilizer(0).order() == 1);

    PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
    CHECK(s4.stabilizer(0).order() == 6);

    PermGroup two(4, {cyc("(1,2)", 4), cyc("(3,4)", 4)});
    CHECK(two.stabilizer(0).order() == 2);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 6);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        int v = static_cast<int>(rng() % degree);
        CHECK(g.orbit(v).size() * g.stabilizer(v).order() == g.order());
    }
}

TEST_CASE("transporter maps within the orbit") {
    PermGroup d4(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
    auto g = d4.transporter(0, 2);
    REQUIRE(g.has_value());
    CHECK((*g)[0] == 2);
    PermGroup swap_only(4, {cyc("(1,2)", 4)});
    CHECK_FALSE(swap_only.transporter(0, 3).has_value());
}

TEST_CASE("semiregular groups") {
    CHECK(PermGroup(4, {cyc("(1,2)(3,4)", 4)}).is_semiregular());
    CHECK_FALSE(PermGroup(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)}).is_semiregular());
    CHECK(PermGroup(4, {cyc("(1,2,3,4)", 4)}).is_semiregular()); // regular
    CHECK(PermGroup(3).is_semiregular());                        // trivial
}

TEST_CASE("lexicographic enumeration") {
    PermGroup s3(3, {cyc("(1,2)", 3), cyc("(1,2,3)", 3)});
    std::vector<Permutation> seen;
    s3.for_each_element(100, [&](const Permutation& p) {
        seen.push_back(p);
        return true;
    });
    REQUIRE(seen.size() == 6);
    CHECK(seen.front().is_identity());
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);

    // first non-identity element of C_4 is the 4-cycle itself
    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(c4.first_nonidentity() == cyc("(1,2,3,4)", 4));

    // budget stops the walk
    PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
    std::size_t count = 0;
    s4.for_each_element(10, [&](const Permutation&) {
        ++count;
        return true;
    });
    CHECK(count == 10);
}

TEST_CASE("elements respects the budget") {
    PermGroup s4(4, {cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)});
    CHECK_THROWS_AS(s4.elements(10), Error);
    CHECK(s4.elements(100).size() == 24);
}

TEST_CASE("generator degree mismatch is rejected") {
    CHECK_THROWS_AS(PermGroup(4, {Permutation(5)}), Error);
}

TEST_CASE("shared groups can be queried concurrently") {
    PermGroup g(8, {cyc("(1,2,3,4,5,6,7,8)", 8), cyc("(1,2)", 8)});
    std::vector<std::thread> workers;
    std::vector<std::uint64_t> orders(8, 0);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { orders[t] = g.order() + g.stabilizer(t % 8).order(); });
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) CHECK(orders[t] == 40320 + 5040);
}

TEST_CASE("same_group_as ignores the generating set") {
    PermGroup a(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
    PermGroup b(4, {cyc("(2,4)", 4), cyc("(1,2,3,4)", 4)});
    CHECK(a.same_group_as(b));
    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK_FALSE(a.same_group_as(c4));
}
