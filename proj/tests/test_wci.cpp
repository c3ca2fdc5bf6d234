#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwci/fixtures.hpp"
#include "gwci/selftest.hpp"
#include "gwci/wci.hpp"
#include "test_util.hpp"

using namespace gwci;
using tu::P;

TEST_CASE("derived ideal of the plane fixture") {
    ProblemFile prob = fixtures::plane_powers();
    GFrame F = prob.frame();
    GroebnerBasis D = partial_ideal(prob.ideal, F);
    Poly g1 = F.g[0], g2 = F.g[1];
    CHECK(same_ideal(D, buchberger({g1 * g2, g1 * g1, g2 * g2}, F.order)));
    CHECK(same_ideal(D, partial_ideal_bruteforce(prob.ideal, F, 6)));
}

TEST_CASE("derived ideal of a principal ideal containing g_1") {
    const GFrame& F = tu::frame_plane();
    GroebnerBasis D = partial_ideal({F.g[0]}, F);
    CHECK(ideal_contains(D, P("1", tu::XY)));
}

TEST_CASE("derived ideal always contains I, and is monotone on samples") {
    tu::Rng rng(83);
    const GFrame& F = tu::frame_plane();
    for (int trial = 0; trial < 8; ++trial) {
        Poly f = rng.poly(2, 5, 2), h = rng.poly(2, 5, 2);
        if (f.is_zero()) continue;
        std::vector<Poly> small{f};
        std::vector<Poly> big{f, h.is_zero() ? F.g[0] : h};
        GroebnerBasis Ds = partial_ideal(small, F);
        GroebnerBasis Db = partial_ideal(big, F);
        for (const Poly& p : small) CHECK(ideal_contains(Ds, p));
        for (const Poly& b : Ds.basis) CHECK(ideal_contains(Db, b));
    }
}

TEST_CASE("derived ideal of the converse fixture, against the brute-force oracle") {
    ProblemFile prob = fixtures::pure_powers_b();
    GFrame F = prob.frame();
    GroebnerBasis D = partial_ideal(prob.ideal, F);
    CHECK(ideal_contains(D, P("y^8")));
    for (const Poly& f : prob.ideal) CHECK(ideal_contains(D, f));
    CHECK(same_ideal(D, partial_ideal_bruteforce(prob.ideal, F, 5)));
}

TEST_CASE("sufficient condition") {
    {
        ProblemFile prob = fixtures::plane_powers();
        PropCheck pc = check_prop_sufficient(prob.ideal, prob.frame());
        CHECK(pc.holds);
        CHECK(!pc.witness.has_value());
    }
    {
        ProblemFile prob = fixtures::pure_powers_b();
        GFrame F = prob.frame();
        PropCheck pc = check_prop_sufficient(prob.ideal, F);
        CHECK(!pc.holds);
        REQUIRE(pc.witness.has_value());
        GroebnerBasis gbI = buchberger(prob.ideal, F.order);
        CHECK(!nf(*pc.witness, gbI).is_zero());
    }
    {
        // principal square: d/dg(g1^2) = (g1), and g1^2 lies in I
        const GFrame& F = tu::frame_plane();
        PropCheck pc = check_prop_sufficient({F.g[0] * F.g[0]}, F);
        CHECK(pc.holds);
    }
}

TEST_CASE("cycle products of the converse fixture") {
    ProblemFile prob = fixtures::pure_powers_b();
    GFrame F = prob.frame();
    GroebnerBasis gbI = buchberger(prob.ideal, F.order);
    GeneratorSet d1 = generators_main(*prob.resolution, F, 1, &gbI);
    std::vector<std::pair<std::string, KoszulElement>> cycles;
    for (std::size_t j = 0; j < d1.count(); ++j)
        cycles.emplace_back("z" + std::to_string(j + 1), d1.cycle(j));

    auto table = cycle_products(cycles, F, gbI);
    auto value = [&](const std::string& a, const std::string& b) {
        for (auto& pr : table)
            if (pr.left == a && pr.right == b) return pr.value;
        return KoszulElement();
    };
    KoszulElement z1z2(2, 3);
    z1z2.add({0, 2}, P("1/9*y^16*z^4"));
    CHECK(value("z1", "z2") == z1z2);
    // z1 z3 equals 4/9 x^5 y^5 z^9 dg2 dg3 mod I (canonical form differs)
    KoszulElement got = value("z1", "z3");
    KoszulElement want(2, 3);
    want.add({1, 2}, P("4/9*x^5*y^5*z^9"));
    CHECK((got - want).reduced(gbI).is_zero());
    CHECK(!got.is_zero());
    // odd-degree self products vanish
    CHECK(value("z1", "z1").is_zero());

    ProductsResult pv = products_vanish(cycles, F, gbI);
    CHECK(!pv.vanish);
}

TEST_CASE("products vanish for the plane fixture across all degrees") {
    ProblemFile prob = fixtures::plane_powers();
    GFrame F = prob.frame();
    GroebnerBasis gbI = buchberger(prob.ideal, F.order);
    std::vector<std::pair<std::string, KoszulElement>> cycles;
    for (int l = 1; l <= prob.resolution->length(); ++l) {
        GeneratorSet S = generators_main(*prob.resolution, F, l, &gbI);
        for (std::size_t j = 0; j < S.count(); ++j)
            cycles.emplace_back("h" + std::to_string(j + 1) + std::to_string(l), S.cycle(j));
    }
    ProductsResult pv = products_vanish(cycles, F, gbI);
    CHECK(pv.vanish);
    CHECK(pv.certificate.basis.size() == cycles.size());
    CHECK(pv.certificate.mu.empty());
    // the all-zero table is a valid trivial Massey operation
    MasseyReport mr = verify_massey(pv.certificate, F, gbI, 3);
    CHECK(mr.ok());
}

TEST_CASE("empty basis trivially vanishes") {
    const GFrame& F = tu::frame_plane();
    GroebnerBasis gbI = buchberger({F.g[0]}, F.order);
    ProductsResult pv = products_vanish({}, F, gbI);
    CHECK(pv.vanish);
}

TEST_CASE("massey table of the converse fixture") {
    ProblemFile prob = fixtures::pure_powers_b();
    GFrame F = prob.frame();
    GroebnerBasis gbI = buchberger(prob.ideal, F.order);
    MasseyTable T = selftest::pure_powers_b_massey(F, gbI);
    for (auto& [label, z] : T.basis) CHECK(is_cycle_mod(z, F, gbI));

    MasseyReport mr = verify_massey(T, F, gbI, 4);
    CHECK(mr.ok());
    CHECK(mr.tuples_checked == 25 + 125 + 625);

    SUBCASE("corrupted entry is reported with its tuple") {
        T.mu[{"h11", "h21"}] = T.mu[{"h11", "h21"}].scaled(Rational(7));
        MasseyReport bad = verify_massey(T, F, gbI, 2);
        REQUIRE(!bad.ok());
        CHECK(bad.violations.front().find("h11,h21") != std::string::npos);
    }

    SUBCASE("degree bookkeeping is validated") {
        KoszulElement wrong(1, 3);
        wrong.add({0}, P("y"));
        T.mu[{"h11", "h21"}] = wrong;
        CHECK_THROWS_AS(verify_massey(T, F, gbI, 2), error);
    }
}
