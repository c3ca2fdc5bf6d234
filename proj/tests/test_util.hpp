#pragma once

#include "gwci/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace tu {

using namespace gwci;

inline const std::vector<std::string> XYZ{"x", "y", "z"};
inline const std::vector<std::string> XY{"x", "y"};

inline Poly P(const std::string& s, const std::vector<std::string>& vars = XYZ) {
    return parse_poly(s, vars);
}

// g = x^2, y^3, z^5
inline const GFrame& frame_pure_powers() {
    static GFrame F = make_frame(XYZ, MonomialOrder(OrderKind::lex, 3),
                                 {P("x^2"), P("y^3"), P("z^5")});
    return F;
}

// g = x^2 + y*z, y^3, z^5
inline const GFrame& frame_quadric() {
    static GFrame F = make_frame(XYZ, MonomialOrder(OrderKind::lex, 3),
                                 {P("x^2+y*z"), P("y^3"), P("z^5")});
    return F;
}

// g = x^2 + y^2, y^3 in k[x,y]
inline const GFrame& frame_plane() {
    static GFrame F = make_frame(XY, MonomialOrder(OrderKind::lex, 2),
                                 {P("x^2+y^2", XY), P("y^3", XY)});
    return F;
}

// g = x, y in k[x,y]
inline const GFrame& frame_linear() {
    static GFrame F =
        make_frame(XY, MonomialOrder(OrderKind::lex, 2), {P("x", XY), P("y", XY)});
    return F;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }

    Rational rational() {
        int num = uniform(-6, 6);
        if (num == 0) num = 1;
        return Rational(num, uniform(1, 4));
    }

    Poly poly(std::size_t nvars, int max_deg = 5, int max_terms = 4) {
        Poly p(nvars);
        int nterms = uniform(1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            Monomial m = Monomial::one(nvars);
            for (std::size_t v = 0; v < nvars; ++v) m.e[v] = uniform(0, max_deg / 2 + 1);
            if (m.degree() > max_deg) continue;
            p.add_term(m, rational());
        }
        return p;
    }

    KoszulElement koszul(const GFrame& F, int degree, int max_deg = 5) {
        KoszulElement w(degree, F.nvars());
        std::vector<int> all(F.s());
        for (std::size_t i = 0; i < F.s(); ++i) all[i] = static_cast<int>(i);
        int nterms = uniform(1, 2);
        for (int t = 0; t < nterms; ++t) {
            std::vector<int> tuple = all;
            std::shuffle(tuple.begin(), tuple.end(), eng);
            tuple.resize(degree);
            w.add(tuple, poly(F.nvars(), max_deg, 3));
        }
        return w;
    }
};

} // namespace tu
