#include "gwci/fixtures.hpp"

namespace gwci::fixtures {

namespace {

ProblemFile make(std::vector<std::string> vars, OrderKind kind, std::vector<std::string> g,
                 std::vector<std::string> ideal, std::vector<int> ranks,
                 std::vector<std::vector<std::vector<std::string>>> diffs) {
    ProblemFile P;
    P.vars = std::move(vars);
    P.order = MonomialOrder(kind, P.vars.size());
    for (const auto& s : g) P.g.push_back(parse_poly(s, P.vars));
    for (const auto& s : ideal) P.ideal.push_back(parse_poly(s, P.vars));
    if (!ranks.empty()) {
        std::vector<PolyMatrix> ms;
        for (const auto& mat : diffs) {
            PolyMatrix M;
            for (const auto& row : mat) {
                std::vector<Poly> r;
                for (const auto& s : row) r.push_back(parse_poly(s, P.vars));
                M.push_back(std::move(r));
            }
            ms.push_back(std::move(M));
        }
        P.resolution = load_resolution(std::move(ranks), std::move(ms));
    }
    return P;
}

} // namespace

ProblemFile pure_powers_a() {
    return make(
        {"x", "y", "z"}, OrderKind::lex, {"x^2", "y^3", "z^5"},
        {"x^2*y^4+y^3*z^7", "y^6", "x^4*y^2"}, {1, 3, 3, 1},
        {
            {{"x^4*y^2", "y^6", "x^2*y^4+y^3*z^7"}},
            {{"-y^4", "0", "-y*z^7-x^2*y^2"},
             {"x^4", "-z^7-x^2*y", "0"},
             {"0", "y^3", "x^4"}},
            {{"-z^7-x^2*y"}, {"-x^4"}, {"y^3"}},
        });
}

ProblemFile quadric_frame() {
    return make(
        {"x", "y", "z"}, OrderKind::lex, {"x^2+y*z", "y^3", "z^5"},
        {"x^2*y^4+y^5*z+x*z^10", "y^6", "x^4*y^2+x^2*y^3*z"}, {1, 3, 3, 1},
        {
            {{"x^4*y^2+x^2*y^3*z", "y^6", "x^2*y^4+y^5*z+x*z^10"}},
            {{"-y^4", "-z^10-x*y^4", "0"},
             {"x^4+x^2*y*z", "-x^3*y*z-x*y^2*z^2", "-x*z^10-x^2*y^4-y^5*z"},
             {"0", "x^3*y^2+x*y^3*z", "y^6"}},
            {{"z^10+x*y^4"}, {"-y^4"}, {"x^3+x*y*z"}},
        });
}

ProblemFile plane_powers() {
    // entries written out in x, y: g1 = x^2+y^2, g2 = y^3
    return make(
        {"x", "y"}, OrderKind::lex, {"x^2+y^2", "y^3"},
        {"x^4*y^3+2*x^2*y^5+y^7", "x^8+4*x^6*y^2+6*x^4*y^4+4*x^2*y^6+y^8", "y^9"},
        {1, 3, 2},
        {
            {{"x^4*y^3+2*x^2*y^5+y^7", "x^8+4*x^6*y^2+6*x^4*y^4+4*x^2*y^6+y^8", "y^9"}},
            {{"-x^4-2*x^2*y^2-y^4", "-y^6"}, {"y^3", "0"}, {"0", "x^4+2*x^2*y^2+y^4"}},
        });
}

ProblemFile pure_powers_b() {
    ProblemFile P = make(
        {"x", "y", "z"}, OrderKind::lex, {"x^2", "y^3", "z^5"},
        {"x^2*y^8", "y^8*z^9", "x^3*z^14+x^5*y^5"}, {1, 3, 2},
        {
            {{"x^2*y^8", "y^8*z^9", "x^3*z^14+x^5*y^5"}},
            {{"-z^9", "-x^3*y^5"}, {"x^2", "-x^3*z^5"}, {"0", "y^8"}},
        });
    return P;
}

ProblemFile linear_frame() {
    return make({"x", "y"}, OrderKind::lex, {"x", "y"}, {"x^2", "x*y"}, {1, 2, 1},
                {
                    {{"x^2", "x*y"}},
                    {{"y"}, {"-x"}},
                });
}

std::vector<std::pair<std::string, ProblemFile>> all() {
    return {
        {"pure_powers_a", pure_powers_a()},
        {"quadric_frame", quadric_frame()},
        {"plane_powers", plane_powers()},
        {"pure_powers_b", pure_powers_b()},
        {"linear_frame", linear_frame()},
    };
}

} // namespace gwci::fixtures
