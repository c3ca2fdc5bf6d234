#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace gwci;
using tu::P;
using tu::XY;
using tu::XYZ;

namespace {

// brute-force S-polynomial reduction oracle for the Buchberger criterion
bool is_groebner_by_criterion(const GroebnerBasis& G) {
    for (std::size_t i = 0; i < G.basis.size(); ++i)
        for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
            Term li = G.basis[i].leading_term(G.order);
            Term lj = G.basis[j].leading_term(G.order);
            Monomial l = lcm(li.mono, lj.mono);
            Poly s = G.basis[i].times_term(l.divide_by(li.mono), Rational(1) / li.coeff) -
                     G.basis[j].times_term(l.divide_by(lj.mono), Rational(1) / lj.coeff);
            if (!nf(s, G).is_zero()) return false;
        }
    return true;
}

} // namespace

TEST_CASE("already a basis: x^2+yz, y^3, z^5") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2+y*z"), P("y^3"), P("z^5")}, lex);
    REQUIRE(G.basis.size() == 3);
    CHECK(is_groebner_by_criterion(G));
    std::vector<Poly> expect{P("y^3"), P("z^5"), P("x^2+y*z")};
    for (const Poly& e : expect)
        CHECK(std::find(G.basis.begin(), G.basis.end(), e) != G.basis.end());
}

TEST_CASE("univariate and tiny cases") {
    GroebnerBasis G = buchberger({parse_poly("x", {"x"})}, MonomialOrder(OrderKind::lex, 1));
    CHECK(G.basis.size() == 1);
    CHECK(G.basis[0] == parse_poly("x", {"x"}));

    GroebnerBasis H = buchberger({P("x^2+y^2", XY), P("y^3", XY)}, MonomialOrder(OrderKind::lex, 2));
    CHECK(H.basis.size() == 2);
    CHECK(is_groebner_by_criterion(H));
}

TEST_CASE("transform matrix reconstructs every basis element") {
    tu::Rng rng(23);
    MonomialOrder ord(OrderKind::grevlex, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> gens;
        int n = rng.uniform(1, 3);
        for (int i = 0; i < n; ++i) {
            Poly p = rng.poly(3, 4, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis G = buchberger(gens, ord);
        CHECK(is_groebner_by_criterion(G));
        for (std::size_t i = 0; i < G.basis.size(); ++i) {
            Poly acc = Poly::zero(3);
            for (std::size_t j = 0; j < gens.size(); ++j) acc += G.transform[i][j] * gens[j];
            CHECK(acc == G.basis[i]);
        }
        // auto-reduced: no term of one element divisible by another's leading term
        for (std::size_t i = 0; i < G.basis.size(); ++i) {
            CHECK(G.basis[i].leading_term(G.order).coeff == Rational(1));
            for (std::size_t j = 0; j < G.basis.size(); ++j) {
                if (i == j) continue;
                Monomial lt = G.basis[j].leading_term(G.order).mono;
                for (const auto& [m, c] : G.basis[i].terms()) CHECK(!lt.divides(m));
            }
        }
    }
}

TEST_CASE("normal form: single division step") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2+y*z"), P("y^3"), P("z^5")}, lex);
    CHECK(nf(P("x^2*y"), G) == P("-y^2*z"));
    CHECK(nf(P("y^3"), G).is_zero());
}

TEST_CASE("normal form properties") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2+y*z"), P("y^3"), P("z^5")}, lex);
    tu::Rng rng(31);
    for (int i = 0; i < 150; ++i) {
        Poly p = rng.poly(3, 6, 4), q = rng.poly(3, 6, 4);
        Poly np = nf(p, G);
        CHECK(nf(p - np, G).is_zero());        // p - nf(p) is in the ideal
        CHECK(nf(np, G) == np);                // idempotent
        Rational a = rng.rational(), b = rng.rational();
        CHECK(nf(p.scaled(a) + q.scaled(b), G) == np.scaled(a) + nf(q, G).scaled(b));
        DivisionResult dr = normal_form(p, G);
        Poly acc = dr.nf;
        for (std::size_t k = 0; k < G.basis.size(); ++k) acc += dr.cofactors[k] * G.basis[k];
        CHECK(acc == p);
    }
}

TEST_CASE("non-membership from the converse example") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2*y^8"), P("y^8*z^9"), P("x^3*z^14+x^5*y^5")}, lex);
    CHECK(!nf(P("y^16"), G).is_zero());
}

TEST_CASE("standard monomials") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2+y*z"), P("y^3"), P("z^5")}, lex);
    std::vector<Monomial> basis = standard_monomials(G);
    CHECK(basis.size() == 30);
    for (const Monomial& m : basis) {
        CHECK(m.e[0] <= 1);
        CHECK(m.e[1] <= 2);
        CHECK(m.e[2] <= 4);
    }

    GroebnerBasis H = buchberger({P("x", XY), P("y", XY)}, MonomialOrder(OrderKind::lex, 2));
    std::vector<Monomial> hb = standard_monomials(H);
    REQUIRE(hb.size() == 1);
    CHECK(hb[0].is_one());

    GroebnerBasis K = buchberger({P("x^2+y^2", XY), P("y^3", XY)}, MonomialOrder(OrderKind::lex, 2));
    std::vector<Monomial> kb = standard_monomials(K);
    CHECK(kb.size() == 6);
    for (const char* s : {"1", "x", "y", "y^2", "x*y", "x*y^2"}) {
        Poly p = P(s, XY);
        CHECK(std::find(kb.begin(), kb.end(), p.terms().begin()->first) != kb.end());
    }

    GroebnerBasis inf = buchberger({P("x^2", XY), P("x^3", XY)}, MonomialOrder(OrderKind::lex, 2));
    CHECK(!is_zero_dimensional(inf));
    CHECK_THROWS_AS(standard_monomials(inf), error);
}

TEST_CASE("lift to generators") {
    MonomialOrder lex(OrderKind::lex, 3);
    GroebnerBasis G = buchberger({P("x^2+y*z"), P("y^3"), P("z^5")}, lex);

    Poly p = P("x^4*y^2+x^2*y^3*z");
    std::vector<Poly> a = lift_to_generators(p, G);
    Poly acc = Poly::zero(3);
    for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * G.generators[j];
    CHECK(acc == p);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero()) continue;
        CHECK(a[j].homogeneous_degree() ==
              *p.homogeneous_degree() - *G.generators[j].homogeneous_degree());
    }

    std::vector<Poly> e2 = lift_to_generators(P("y^3"), G);
    CHECK(e2[0].is_zero());
    CHECK(e2[1] == P("1"));
    CHECK(e2[2].is_zero());

    std::vector<Poly> e3 = lift_to_generators(P("y^4*z"), G);
    CHECK(e3[0].is_zero());
    CHECK(e3[1] == P("y*z"));
    CHECK(e3[2].is_zero());

    CHECK_THROWS_AS(lift_to_generators(P("x"), G), error);
}
