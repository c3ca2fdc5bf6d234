#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"

using namespace gwci;
using tu::P;
using tu::XYZ;

TEST_CASE("parsing the grammar") {
    Poly p = P("x^2*y^4 + y^3*z^7");
    CHECK(p.term_count() == 2);
    Monomial m1({2, 4, 0}), m2({0, 3, 7});
    CHECK(p.terms().at(m1) == Rational(1));
    CHECK(p.terms().at(m2) == Rational(1));

    CHECK(P("0").is_zero());
    CHECK(P("1/3*y^8").terms().at(Monomial({0, 8, 0})) == Rational(1, 3));
    CHECK(P("-x + x").is_zero());
    CHECK(P("2*x*y*x") == P("2*x^2*y"));
    CHECK(P("  x ^ 2 * y  +  3 ") == P("x^2*y+3"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("x^2 +"), error);
    CHECK_THROWS_AS(P("w^2"), error);
    CHECK_THROWS_AS(P("x^0"), error);
    CHECK_THROWS_AS(P("1/0"), error);
    CHECK_THROWS_AS(P(""), error);
    CHECK_THROWS_AS(P("x*2"), error);
    try {
        P("x^2 + @");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("arithmetic examples") {
    CHECK(P("x^2+y*z") * P("y^3") == P("x^2*y^3 + y^4*z"));
    Poly p = P("x^5*y - 2/3*z");
    CHECK(p + Poly::zero(3) == p);
    CHECK(P("x^2*y^4+y^5*z") * P("z^9") == P("x^2*y^4*z^9 + y^5*z^10"));
    CHECK_THROWS_AS(P("x", tu::XY) + P("x"), error);
}

TEST_CASE("independent expand-and-collect cross-check") {
    // (x^2*y^4 + y^5*z) * (z^9 + x*y^8) collected term by term
    Poly a = P("x^2*y^4 + y^5*z");
    Poly b = P("z^9 + x*y^8");
    Poly expect(3);
    expect.add_term(Monomial({2, 4, 9}), Rational(1));
    expect.add_term(Monomial({3, 12, 0}), Rational(1));
    expect.add_term(Monomial({0, 5, 10}), Rational(1));
    expect.add_term(Monomial({1, 13, 1}), Rational(1));
    CHECK(a * b == expect);
}

TEST_CASE("homogeneity") {
    CHECK(P("x^2+y*z").homogeneous_degree() == 2);
    CHECK(!P("x^2+y^3").homogeneous_degree());
    CHECK(!P("x^3*z^14+x^5*y^5").homogeneous_degree());
    CHECK(P("0").homogeneous_degree() == 0);
    CHECK(P("0").is_zero());
}

TEST_CASE("canonical formatting round-trips") {
    MonomialOrder lex(OrderKind::lex, 3);
    for (const char* s : {"x^2*y^4 + y^3*z^7", "0", "1/3*y^8", "-x + 2*z^10",
                          "x - 1", "5", "-2/3*x*y*z"}) {
        Poly p = P(s);
        std::string f = format_poly(p, XYZ, lex);
        CHECK(parse_poly(f, XYZ) == p);
        CHECK(format_poly(parse_poly(f, XYZ), XYZ, lex) == f);
    }
    CHECK(format_poly(P("y^3*z^7 + x^2*y^4"), XYZ, lex) == "x^2*y^4 + y^3*z^7");
    CHECK(format_poly(P("0"), XYZ, lex) == "0");
    CHECK(format_poly(P("-x"), XYZ, lex) == "-x");
}

TEST_CASE("ring axioms on random polynomials") {
    tu::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Poly a = rng.poly(3), b = rng.poly(3), c = rng.poly(3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly::zero(3));
    }
}

TEST_CASE("rationals stay canonical") {
    Rational r(4, -6);
    CHECK(r == Rational(-2, 3));
    CHECK(r.den() == 3);
    CHECK(r.str() == "-2/3");
    CHECK((Rational(1, 3) + Rational(2, 3)).str() == "1");
    tu::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        Rational s = a * b;
        CHECK(s.den() > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.num().get_mpz_t(), s.den().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("monomial orders behave") {
    MonomialOrder lex(OrderKind::lex, 3), grlex(OrderKind::grlex, 3),
        grevlex(OrderKind::grevlex, 3);
    Monomial one = Monomial::one(3);
    Monomial x({1, 0, 0}), y3({0, 3, 0}), xz({1, 0, 1}), y2({0, 2, 0});
    CHECK(lex.less(y3, x));
    CHECK(grlex.less(x, y3));
    CHECK(grevlex.less(xz, y2)); // same degree, smaller power of the last variable wins
    for (const MonomialOrder& o : {lex, grlex, grevlex}) {
        CHECK(o.less(one, x));          // 1 is minimal
        CHECK(!o.less(x, x));
        // multiplicative
        CHECK(o.less(x * y3, y3 * y3) == o.less(x, y3));
    }
}
