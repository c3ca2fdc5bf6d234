#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gwci/fixtures.hpp"
#include "gwci/selftest.hpp"
#include "test_util.hpp"

using namespace gwci;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(GWCI_FIXTURE_DIR) + "/" + name + ".json";
}

} // namespace

TEST_CASE("fixture files parse to the embedded problems") {
    for (auto& [name, embedded] : fixtures::all()) {
        CAPTURE(name);
        ProblemFile loaded = load_problem(fixture_path(name));
        CHECK(loaded.vars == embedded.vars);
        CHECK(loaded.order.kind == embedded.order.kind);
        CHECK(loaded.g == embedded.g);
        CHECK(loaded.ideal == embedded.ideal);
        REQUIRE(loaded.resolution.has_value());
        CHECK(loaded.resolution->ranks == embedded.resolution->ranks);
        CHECK(loaded.resolution->diffs == embedded.resolution->diffs);
    }
}

TEST_CASE("massey section of the converse fixture matches the computed table") {
    ProblemFile loaded = load_problem(fixture_path("pure_powers_b"));
    REQUIRE(loaded.massey.has_value());
    GFrame F = loaded.frame();
    GroebnerBasis gbI = buchberger(loaded.ideal, F.order);
    MasseyTable from_file = massey_from_json(*loaded.massey, F);
    MasseyTable computed = selftest::pure_powers_b_massey(F, gbI);
    CHECK(from_file.basis == computed.basis);
    CHECK(from_file.mu == computed.mu);
}

TEST_CASE("expansion and koszul serialization") {
    GFrame F = fixtures::quadric_frame().frame();
    GExpansion E = g_expand(parse_poly("x^4*y^2+x^2*y^3*z", F.vars), F);
    json j = expansion_to_json(E, F);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["N"] == json::array({1, 1, 0}));
    CHECK(j[0]["coeff"] == "-z");
    CHECK(j[1]["N"] == json::array({2, 0, 0}));
    CHECK(j[1]["coeff"] == "y^2");

    KoszulElement w(2, F.nvars());
    w.add({2, 0}, parse_poly("y^2", F.vars));
    json k = koszul_to_json(w, F);
    REQUIRE(k.size() == 1);
    CHECK(k[0]["dg"] == json::array({1, 3}));
    CHECK(k[0]["coeff"] == "-y^2");
    CHECK(koszul_from_json(k, F) == w);
}

TEST_CASE("total element serialization") {
    ProblemFile prob = fixtures::pure_powers_b();
    GFrame F = prob.frame();
    TotalElement w = sigma_tilde(*prob.resolution, F, 1, 0);
    json j = total_to_json(w, F);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["level"] == 0);
    CHECK(j[0]["basis"] == 1);
    CHECK(j[0]["form"][0]["dg"] == json::array({1}));
    CHECK(j[1]["level"] == 1);
}

TEST_CASE("koszul round-trip on random elements") {
    tu::Rng rng(97);
    GFrame F = fixtures::pure_powers_a().frame();
    for (int i = 0; i < 50; ++i) {
        KoszulElement w = rng.koszul(F, rng.uniform(0, 3));
        CHECK(koszul_from_json(koszul_to_json(w, F), F) == w);
    }
}

TEST_CASE("problem schema violations") {
    CHECK_THROWS_AS(problem_from_json(json::parse("{}")), error);
    CHECK_THROWS_AS(problem_from_json(json::parse(R"({"ring": {"vars": ["x"]}})")), error);
    CHECK_THROWS_AS(
        problem_from_json(json::parse(
            R"({"ring": {"vars": ["x"], "order": "weird"}, "g": ["x"]})")),
        error);
    CHECK_THROWS_AS(
        problem_from_json(json::parse(
            R"({"ring": {"vars": ["x"]}, "g": ["y"]})")),
        error);
    // resolution shape mismatch
    CHECK_THROWS_AS(
        problem_from_json(json::parse(
            R"({"ring": {"vars": ["x"]}, "g": ["x^2"],
                "resolution": {"ranks": [1, 2], "diffs": [[["x"]]]}})")),
        error);
}

TEST_CASE("orders serialize with precedence") {
    std::vector<std::string> vars{"x", "y", "z"};
    MonomialOrder ord(OrderKind::grevlex, {2, 0, 1});
    json j = order_to_json(ord, vars);
    MonomialOrder back = order_from_json(j, vars);
    CHECK(back.kind == ord.kind);
    CHECK(back.precedence == ord.precedence);
    CHECK(order_from_json(json("lex"), vars).kind == OrderKind::lex);
}

TEST_CASE("reports are deterministic") {
    GFrame F = fixtures::pure_powers_b().frame();
    GExpansion E = g_expand(parse_poly("x^2*y^8", F.vars), F);
    std::string a = expansion_to_json(E, F).dump();
    std::string b = expansion_to_json(g_expand(parse_poly("x^2*y^8", F.vars), F), F).dump();
    CHECK(a == b);
}
