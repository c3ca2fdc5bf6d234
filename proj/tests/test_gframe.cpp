#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace gwci;
using tu::P;
using tu::XY;
using tu::XYZ;

namespace {

GExpansion expansion(const GFrame& F, std::vector<std::pair<std::vector<int>, std::string>> cs) {
    GExpansion E;
    E.s = F.s();
    for (auto& [N, s] : cs) E.coeffs.emplace(N, parse_poly(s, F.vars));
    return E;
}

} // namespace

TEST_CASE("frame validation") {
    const GFrame& F = tu::frame_quadric();
    CHECK(F.std_basis.size() == 30);
    CHECK(F.degs == std::vector<int>{2, 3, 5});

    const GFrame& G = tu::frame_pure_powers();
    CHECK(G.std_basis.size() == 30);

    CHECK_THROWS_AS(make_frame(XY, MonomialOrder(OrderKind::lex, 2),
                               {P("x^2", XY), P("x^3", XY)}),
                    error);
    CHECK_THROWS_AS(make_frame(XY, MonomialOrder(OrderKind::lex, 2),
                               {P("x^2", XY), P("x+y^2", XY)}),
                    error);
    CHECK_THROWS_AS(make_frame(XYZ, MonomialOrder(OrderKind::lex, 3), {P("x^2"), P("y^3")}),
                    error);
}

TEST_CASE("frames with different orders coexist") {
    const GFrame& lex_frame = tu::frame_pure_powers();
    GFrame grev = make_frame(XYZ, MonomialOrder(OrderKind::grevlex, 3),
                             {P("x^2"), P("y^3"), P("z^5")});
    Poly q = P("x^2*y^8 + x*y^2*z^4");
    GExpansion a = g_expand(q, lex_frame);
    GExpansion b = g_expand(q, grev);
    CHECK(a == b); // same leading terms here, same splitting
    CHECK(g_reconstruct(a, lex_frame) == q);
    CHECK(grev.std_basis.size() == 30);
}

TEST_CASE("expansion of the worked entry") {
    const GFrame& F = tu::frame_quadric();
    GExpansion E = g_expand(P("x^4*y^2+x^2*y^3*z"), F);
    CHECK(E == expansion(F, {{{2, 0, 0}, "y^2"}, {{1, 1, 0}, "-z"}}));
    CHECK(g_reconstruct(E, F) == P("x^4*y^2+x^2*y^3*z"));
}

TEST_CASE("expansion basics") {
    const GFrame& F = tu::frame_quadric();
    CHECK(g_expand(F.g[1], F) == expansion(F, {{{0, 1, 0}, "1"}}));
    Poly b = P("x*y^2*z^3"); // standard monomial
    CHECK(g_expand(b, F) == expansion(F, {{{0, 0, 0}, "x*y^2*z^3"}}));
    CHECK(g_expand(P("0"), F).coeffs.empty());

    const GFrame& G = tu::frame_pure_powers();
    CHECK(g_expand(P("x^2*y^8"), G) == expansion(G, {{{1, 2, 0}, "y^2"}}));
}

TEST_CASE("expansion round-trip and idempotence on random polynomials") {
    tu::Rng rng(71);
    for (const GFrame* F : {&tu::frame_pure_powers(), &tu::frame_quadric()}) {
        for (int i = 0; i < 100; ++i) {
            Poly q = rng.poly(3, 7, 4);
            GExpansion E = g_expand(q, *F);
            CHECK(g_reconstruct(E, *F) == q);
            for (const auto& [N, c] : E.coeffs) {
                CHECK(!c.is_zero());
                CHECK(F->sigma_reduced(c));
            }
            CHECK(g_expand(g_reconstruct(E, *F), *F) == E);
        }
    }
}

TEST_CASE("partial derivative examples") {
    const GFrame& G = tu::frame_pure_powers();
    CHECK(partial(P("x^2*y^8"), 0, G) == P("y^8"));
    CHECK(partial(P("x^2*y^3*z^5"), 0, G) == P("y^3*z^5"));
    for (std::size_t j = 0; j < 3; ++j) CHECK(partial(P("x*y^2*z^4"), j, G).is_zero());
}

TEST_CASE("hatted partial examples") {
    const GFrame& G = tu::frame_pure_powers();
    CHECK(hatted_partial(P("x^2*y^8"), 0, G) == P("1/3*y^8"));
    CHECK(hatted_partial(P("x^2*y^8"), 1, G) == P("2/3*x^2*y^5"));
    CHECK(hatted_partial(P("y^6"), 1, G) == P("y^3"));   // g2^2 -> g2
    CHECK(hatted_partial(G.g[2], 2, G) == P("1"));
}

TEST_CASE("g-degree") {
    const GFrame& H = tu::frame_plane();
    Poly g1 = H.g[0], g2 = H.g[1];
    CHECK(g_degree(g1 * g1 * g2, H) == 3);
    CHECK(g_degree(P("x*y^2", XY), H) == 0);
    CHECK(g_degree(P("0", XY), H) == 0);

    const GFrame& G = tu::frame_pure_powers();
    CHECK(g_degree(P("x^2*y^4+y^3*z^7"), G) == 2);
    CHECK(!g_degree(P("x^2+y^3*z^5"), G).has_value());
}

TEST_CASE("mixed partials commute") {
    tu::Rng rng(101);
    for (const GFrame* F : {&tu::frame_pure_powers(), &tu::frame_quadric()}) {
        for (int i = 0; i < 100; ++i) {
            Poly q = rng.poly(3, 7, 3);
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b)
                    CHECK(partial(partial(q, a, *F), b, *F) ==
                          partial(partial(q, b, *F), a, *F));
        }
    }
}

TEST_CASE("corrected product rule, clean Leibniz case, Euler identity") {
    tu::Rng rng(131);
    const GFrame& F = tu::frame_quadric();
    for (int i = 0; i < 100; ++i) {
        Poly q = rng.poly(3, 5, 3), r = rng.poly(3, 5, 3);
        GExpansion Eq = g_expand(q, F), Er = g_expand(r, F);
        for (std::size_t j = 0; j < 3; ++j) {
            Poly lhs = partial(q * r, j, F);
            Poly rhs = partial(q, j, F) * r + partial(r, j, F) * q;
            for (const auto& [N, cq] : Eq.coeffs)
                for (const auto& [M, cr] : Er.coeffs) {
                    std::vector<int> NM(N);
                    for (std::size_t t = 0; t < NM.size(); ++t) NM[t] += M[t];
                    rhs += partial(cq * cr, j, F) * g_power(F, NM);
                }
            CHECK(lhs == rhs);
        }

        // clean Leibniz against g^N
        std::vector<int> N{rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 1)};
        Poly gN = g_power(F, N);
        for (std::size_t j = 0; j < 3; ++j) {
            Poly lhs = partial(q * gN, j, F);
            std::vector<int> Nm(N);
            --Nm[j];
            Poly rhs = partial(q, j, F) * gN + q.scaled(Rational(N[j])) * g_power(F, Nm);
            CHECK(lhs == rhs);
        }

        // Euler: sum_j d_j(q) g_j = sum_N |N| sigma(q_N) g^N
        Poly lhs = Poly::zero(3);
        for (std::size_t j = 0; j < 3; ++j) lhs += partial(q, j, F) * F.g[j];
        Poly rhs = Poly::zero(3);
        for (const auto& [N, c] : Eq.coeffs) {
            int total = 0;
            for (int n : N) total += n;
            rhs += c.scaled(Rational(total)) * g_power(F, N);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hatted partial is the scaled partial on g-homogeneous input") {
    tu::Rng rng(151);
    const GFrame& F = tu::frame_pure_powers();
    for (int i = 0; i < 100; ++i) {
        // build a g-homogeneous element of g-degree d
        int d = rng.uniform(1, 3);
        Poly q = Poly::zero(3);
        for (int t = 0; t < 2; ++t) {
            std::vector<int> N(3, 0);
            for (int u = 0; u < d; ++u) ++N[rng.uniform(0, 2)];
            Monomial m({rng.uniform(0, 1), rng.uniform(0, 2), rng.uniform(0, 4)});
            q += Poly::monomial(m, rng.rational()) * g_power(F, N);
        }
        if (q.is_zero()) continue;
        auto gd = g_degree(q, F);
        REQUIRE(gd.has_value());
        if (*gd == 0) continue;
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(hatted_partial(q, j, F) == partial(q, j, F).scaled(Rational(1, *gd)));
    }
}
