#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "semireg/corpus.hpp"
#include "semireg/errors.hpp"
#include "semireg/finder.hpp"
#include "semireg/oracle.hpp"
#include "test_util.hpp"

using namespace semireg;
using namespace semireg::testutil;

TEST_CASE("brute force finds the first semiregular element in order") {
    PermGroup s3(3, {cyc("(1,2)", 3), cyc("(1,2,3)", 3)});
    SearchReport report = brute_force_semiregular(s3, 1000);
    REQUIRE(report.found.has_value());
    CHECK(*report.found == cyc("(1,2,3)", 3)); // first 3-cycle in lexicographic order
    CHECK_FALSE(report.exhausted);

    SearchReport trivial = brute_force_semiregular(PermGroup(4), 1000);
    CHECK_FALSE(trivial.found.has_value());
    CHECK(trivial.exhausted);

    SearchReport s9 = brute_force_semiregular(symmetric_group(9), 1000000);
    REQUIRE(s9.found.has_value());
    CHECK(s9.found->is_semiregular());
    CHECK(s9.elements_scanned < 1000000);
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    PermGroup s4 = symmetric_group(4);
    // pick a budget too small to reach any semiregular element? the scan may
    // still find one early; use a group whose first elements all fix points
    SearchReport r = brute_force_semiregular(s4, 2);
    CHECK(r.elements_scanned <= 2);
    CHECK_FALSE(r.exhausted);
}

TEST_CASE("all_semiregular on small groups") {
    PermGroup d4(4, {cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)});
    auto all = all_semiregular(d4, 1000);
    // two 4-cycles, the half-turn, and the two edge reflections
    CHECK(all.size() == 5);
    auto has = [&](const Permutation& p) {
        return std::find(all.begin(), all.end(), p) != all.end();
    };
    CHECK(has(cyc("(1,3)(2,4)", 4)));
    CHECK(has(cyc("(1,2,3,4)", 4)));
    CHECK(has(cyc("(1,4,3,2)", 4)));
    CHECK(has(cyc("(1,2)(3,4)", 4)));
    CHECK(has(cyc("(1,4)(2,3)", 4)));

    PermGroup c4(4, {cyc("(1,2,3,4)", 4)});
    CHECK(all_semiregular(c4, 1000).size() == 3); // regular: everything qualifies

    PermGroup s3(3, {cyc("(1,2)", 3), cyc("(1,2,3)", 3)});
    CHECK(all_semiregular(s3, 1000).size() == 2); // the two 3-cycles

    CHECK_THROWS_AS(all_semiregular(symmetric_group(9), 10), Error);
}

TEST_CASE("all_semiregular is closed under inversion and coprime powers") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        int degree = 4 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        if (g.order() > 5000) continue;
        auto all = all_semiregular(g, 5000);
        auto has = [&](const Permutation& p) {
            return std::find(all.begin(), all.end(), p) != all.end();
        };
        for (const auto& e : all) {
            CHECK(has(e.inverse()));
            std::uint64_t ord = e.order();
            for (std::uint64_t k = 2; k < ord; ++k)
                if (std::gcd(k, ord) == 1) CHECK(has(e.power(static_cast<long long>(k))));
        }
    }
}

TEST_CASE("brute force agrees with a naive filter") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 5);
        PermGroup g(degree, {random_perm(rng, degree), random_perm(rng, degree)});
        if (g.order() > 10000) continue;
        auto elements = g.elements(10000);
        auto naive = std::find_if(elements.begin(), elements.end(), [](const Permutation& p) {
            return !p.is_identity() && p.is_semiregular();
        });
        SearchReport report = brute_force_semiregular(g, 10000);
        if (naive == elements.end()) {
            CHECK_FALSE(report.found.has_value());
            CHECK(report.exhausted);
        } else {
            REQUIRE(report.found.has_value());
            CHECK(*report.found == *naive);
        }
    }
}

TEST_CASE("certificate verification accepts finder output and rejects corruption") {
    auto pair = build_family("paley:17");
    Certificate cert = find_semiregular_8valent(pair.graph, pair.group);
    CHECK(verify_certificate(cert, pair.graph, pair.group).ok);

    Certificate identity_cert = cert;
    identity_cert.element = Permutation(17);
    identity_cert.order = 1;
    identity_cert.cycle_length = 1;
    VerifyResult r1 = verify_certificate(identity_cert, pair.graph, pair.group);
    CHECK_FALSE(r1.ok);
    CHECK(r1.reason == "element is the identity");

    Certificate wrong_order = cert;
    wrong_order.order += 1;
    CHECK_FALSE(verify_certificate(wrong_order, pair.graph, pair.group).ok);

    Certificate wrong_cycle = cert;
    wrong_cycle.cycle_length += 1;
    CHECK_FALSE(verify_certificate(wrong_cycle, pair.graph, pair.group).ok);

    // splice a transposition into one cycle: the type goes non-uniform
    Certificate spliced = cert;
    int a = 0, b = spliced.element[0];
    std::vector<int> img(17);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[a], img[b]);
    spliced.element = compose(Permutation::from_images(img), cert.element);
    CHECK_FALSE(verify_certificate(spliced, pair.graph, pair.group).ok);

    // a semiregular element outside the group: a 17-cycle that is no translation
    Certificate outsider = cert;
    outsider.element = cyc("(1,3,2,4,5,6,7,8,9,10,11,12,13,14,15,16,17)", 17);
    outsider.order = 17;
    outsider.cycle_length = 17;
    VerifyResult r2 = verify_certificate(outsider, pair.group);
    CHECK_FALSE(r2.ok);
    CHECK(r2.reason == "element is not a member of the group");
}

TEST_CASE("verification rejects non-automorphisms") {
    // (1,2)(3,4)(5,6)(7,8) is in S8 and uniform but maps the cycle edge {1,2}
    // to the non-edge {0,3}
    Graph c8 = circulant(8, {1, 7});
    Certificate cert;
    cert.element = cyc("(1,2)(3,4)(5,6)(7,8)", 8);
    cert.order = 2;
    cert.cycle_length = 2;
    VerifyResult r = verify_certificate(cert, c8, symmetric_group(8));
    CHECK_FALSE(r.ok);
    CHECK(r.reason == "element maps an edge to a non-edge");
}

TEST_CASE("degenerate domains give forced answers") {
    PermGroup trivial(1);
    CHECK(trivial.order() == 1);
    CHECK(trivial.orbit(0) == std::vector<int>{0});
    CHECK(trivial.is_transitive());
    CHECK(trivial.is_semiregular());
    SearchReport r = brute_force_semiregular(trivial, 10);
    CHECK(r.exhausted);
    CHECK_FALSE(r.found.has_value());
}
